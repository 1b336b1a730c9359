#include "pisot/maxmin.hpp"

#include "pisot/error.hpp"
#include "pisot/lp.hpp"

#include <algorithm>
#include <chrono>

namespace pisot {

namespace {

// Terms y_n = c_n . y + e_n of the sequence of fractional parts, where
// y = (y_1..y_d) is the window and e_n absorbs the chosen integer parts.
// A point has F >= v on the first d + K forms iff v <= y_n <= 1 - v for all
// n <= d + K, so each choice of integer parts is one LP in (y, v).
class BranchAndBound {
public:
  BranchAndBound(const RecurrenceSpec& rec, int depth, const Rat& floor, double budget)
      : rec_(rec), d_(static_cast<std::size_t>(rec.degree())), depth_(depth), floor_(floor),
        budget_(budget), start_(std::chrono::steady_clock::now()) {
    for (std::size_t j = 0; j < d_; ++j) {
      std::vector<std::int64_t> e(d_, 0);
      e[j] = 1;
      c_.push_back(std::move(e));
      e_.push_back(0);
    }
    lo_ = sgn(floor_) > 0 ? floor_ : Rat(0);
    hi_ = 1 - lo_;
  }

  MaxMinResult run() {
    MaxMinResult out;
    out.method = "branch-and-bound";
    out.depth_used = depth_;
    auto root = solve();
    ++nodes_;
    if (root.value >= floor_) descend(0, root);
    out.nodes = nodes_;
    out.complete = !stopped_;
    if (!found_) {
      if (stopped_) return out;
      throw InternalInconsistency("search floor exceeds the sup of the max-min objective");
    }
    out.sup_value = best_;
    for (auto& w : witnesses_)
      for (auto& v : w) v = frac(v);
    std::sort(witnesses_.begin(), witnesses_.end());
    witnesses_.erase(std::unique(witnesses_.begin(), witnesses_.end()), witnesses_.end());
    out.witnesses = std::move(witnesses_);
    return out;
  }

private:
  struct Solved {
    Rat value;
    RatVec point;  // (y_1..y_d, v)
  };

  Solved solve() const {
    const std::size_t terms = c_.size();
    const std::size_t rows = d_ + 2 * terms;
    RatMatrix a(rows, d_ + 1);
    RatVec b(rows), obj(d_ + 1, Rat(0));
    obj[d_] = 1;
    for (std::size_t j = 0; j < d_; ++j) {
      a(j, j) = -1;
      b[j] = 0;
    }
    std::size_t arg = rows;
    for (std::size_t n = 0; n < terms; ++n) {
      const std::size_t lo = d_ + 2 * n, up = lo + 1;
      for (std::size_t j = 0; j < d_; ++j) {
        a(lo, j) = -c_[n][j];
        a(up, j) = c_[n][j];
      }
      a(lo, d_) = 1;
      a(up, d_) = 1;
      b[lo] = e_[n];
      b[up] = 1 - e_[n];
      for (std::size_t r : {lo, up})
        if (arg == rows || b[r] < b[arg]) arg = r;
    }
    std::vector<std::size_t> basis;
    for (std::size_t j = 0; j < d_; ++j) basis.push_back(j);
    basis.push_back(arg);
    LpResult r = maximize_lp(a, b, obj, basis);
    if (r.status != LpStatus::optimal) throw InternalInconsistency("unbounded max-min LP");
    return Solved{r.value, std::move(r.point)};
  }

  bool satisfies_last(const RatVec& p) const {
    const auto& c = c_.back();
    Rat s = e_.back();
    for (std::size_t j = 0; j < d_; ++j) s += c[j] * p[j];
    return p[d_] <= s && s <= 1 - p[d_];
  }

  bool out_of_time() {
    if (budget_ <= 0) return false;
    if ((nodes_ & 63) == 0 &&
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count() > budget_)
      stopped_ = true;
    return stopped_;
  }

  const Rat& threshold() const { return found_ && best_ > floor_ ? best_ : floor_; }

  void descend(int level, const Solved& here) {
    if (stopped_ || here.value < threshold()) return;
    if (level == depth_) {
      RatVec w(here.point.begin(), here.point.begin() + static_cast<std::ptrdiff_t>(d_));
      if (!found_ || here.value > best_) {
        found_ = true;
        best_ = here.value;
        witnesses_.clear();
      }
      if (witnesses_.size() < 256) witnesses_.push_back(std::move(w));
      return;
    }
    // Next term: c = sum a_i c_{n-i}, base = sum a_i e_{n-i}; y = base + c.y - delta.
    const std::size_t n = c_.size();
    std::vector<std::int64_t> c(d_, 0);
    std::int64_t base = 0;
    Rat smin = 0, smax = 0;
    for (std::size_t i = 1; i <= d_; ++i) {
      const std::int64_t ai = rec_.a(static_cast<int>(i));
      for (std::size_t j = 0; j < d_; ++j) c[j] += ai * c_[n - i][j];
      base += ai * e_[n - i];
      smin += ai > 0 ? ai * lo_ : ai * hi_;
      smax += ai > 0 ? ai * hi_ : ai * lo_;
    }
    const Int dmin = ceil_of(smin - hi_), dmax = floor_of(smax - lo_);
    std::vector<std::pair<Solved, std::int64_t>> kids;
    c_.push_back(c);
    e_.push_back(0);
    for (Int delta = dmin; delta <= dmax; ++delta) {
      e_.back() = base - delta.get_si();
      if (out_of_time()) break;
      ++nodes_;
      if (satisfies_last(here.point)) {
        kids.emplace_back(here, e_.back());
      } else {
        Solved s = solve();
        if (s.value >= threshold()) kids.emplace_back(std::move(s), e_.back());
      }
    }
    std::stable_sort(kids.begin(), kids.end(),
                     [](const auto& x, const auto& y) { return x.first.value > y.first.value; });
    for (auto& [s, e] : kids) {
      e_.back() = e;
      descend(level + 1, s);
      if (stopped_) break;
    }
    c_.pop_back();
    e_.pop_back();
  }

  const RecurrenceSpec& rec_;
  std::size_t d_;
  int depth_;
  Rat floor_, lo_, hi_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::vector<std::int64_t>> c_;
  std::vector<std::int64_t> e_;
  std::int64_t nodes_ = 0;
  bool stopped_ = false;
  bool found_ = false;
  Rat best_;
  std::vector<RatVec> witnesses_;
};

} // namespace

MaxMinResult maximize_recurrence(const RecurrenceSpec& rec, int depth, const Rat& floor, double time_budget_s) {
  if (depth < 0) throw InvalidArgument("depth must be nonnegative");
  if (floor > make_rat(1, 2)) throw InvalidArgument("floor above 1/2 is never attained");
  return BranchAndBound(rec, depth, floor, time_budget_s).run();
}

} // namespace pisot
