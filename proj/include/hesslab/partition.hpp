// Integer partitions: enumeration, conjugation and the dominance order.
#pragma once

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hesslab {

// A partition of n_total() into weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // Exponent-notation constructor: 3^e3 2^e2 1^e1.
  static Partition from_exponents(int e3, int e2, int e1) {
    if (e3 < 0 || e2 < 0 || e1 < 0) throw std::invalid_argument("negative exponent");
    std::vector<int> p;
    p.insert(p.end(), e3, 3);
    p.insert(p.end(), e2, 2);
    p.insert(p.end(), e1, 1);
    return Partition(std::move(p));
  }

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t length() const { return parts_.size(); }

  int n_total() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

  int multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
  }

  int distinct_parts() const {
    int d = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (i == 0 || parts_[i] != parts_[i - 1]) ++d;
    return d;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

  // Exponent display: 3^2 2 1^3.
  std::string to_string() const {
    if (parts_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size();) {
      std::size_t j = i;
      while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
      if (i) os << '.';
      os << parts_[i];
      if (j - i > 1) os << '^' << (j - i);
      i = j;
    }
    return os.str();
  }

 private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.to_string();
}

// All partitions of n with parts bounded by max_part (0 = unbounded), in
// reverse-lexicographic order.
inline std::vector<Partition> partitions_of(int n, int max_part = 0) {
  if (n < 1) throw std::invalid_argument("partitions_of: n must be >= 1");
  if (max_part == 0) max_part = n;
  if (max_part < 1) throw std::invalid_argument("partitions_of: max_part must be >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int bound) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, bound); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, max_part);
  return out;
}

// Conjugate partition (Young-diagram reflection).
inline Partition transpose(const Partition& p) {
  std::vector<int> t;
  for (int i = 1; i <= p.max_part(); ++i) {
    int c = 0;
    for (int part : p.parts())
      if (part >= i) ++c;
    t.push_back(c);
  }
  return Partition(std::move(t));
}

// Dominance order: p <= q iff every prefix sum of p is <= that of q.
// This is the closure order on nilpotent orbits.
inline bool dominance_leq(const Partition& p, const Partition& q) {
  if (p.n_total() != q.n_total())
    throw std::invalid_argument("dominance_leq: incomparable (different totals)");
  std::size_t len = std::max(p.length(), q.length());
  long sp = 0, sq = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sp += i < p.length() ? p.parts()[i] : 0;
    sq += i < q.length() ? q.parts()[i] : 0;
    if (sp > sq) return false;
  }
  return true;
}

}  // namespace hesslab
