#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace itx {

// A subset of the ground set {0, ..., n-1}, n <= 32, as a bitmask: bit i set
// means element i is in the subset.
using SubsetMask = std::uint32_t;

inline constexpr int kMaxGroundSize = 32;

inline void require_ground_size(int n) {
  if (n < 0 || n > kMaxGroundSize)
    throw std::invalid_argument("ground set size must be between 0 and 32");
}

inline int set_size(SubsetMask m) { return std::popcount(m); }

inline SubsetMask full_mask(int n) {
  require_ground_size(n);
  return n == kMaxGroundSize ? ~SubsetMask{0} : ((SubsetMask{1} << n) - 1);
}

// Renders a subset as its ascending element list, e.g. "[0 2 3]"; the empty
// set is "[]".
inline std::string format_set(SubsetMask m) {
  std::string out = "[";
  bool first = true;
  for (int i = 0; i < kMaxGroundSize; ++i) {
    if (!(m >> i & 1u)) continue;
    if (!first) out += ' ';
    out += std::to_string(i);
    first = false;
  }
  out += ']';
  return out;
}

// A finite family of subsets: deduplicated, stored in ascending mask order,
// with O(1) membership/position lookup. Position in the ascending order is
// the canonical index used by every value vector aligned to a family.
class SetFamily {
 public:
  SetFamily() = default;

  explicit SetFamily(std::vector<SubsetMask> masks) : masks_(std::move(masks)) {
    std::sort(masks_.begin(), masks_.end());
    masks_.erase(std::unique(masks_.begin(), masks_.end()), masks_.end());
    index_.reserve(masks_.size());
    for (std::size_t i = 0; i < masks_.size(); ++i)
      index_.emplace(masks_[i], static_cast<std::uint32_t>(i));
  }

  std::size_t size() const { return masks_.size(); }
  bool empty() const { return masks_.empty(); }

  SubsetMask mask(std::size_t pos) const { return masks_[pos]; }

  std::optional<std::size_t> find(SubsetMask m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return static_cast<std::size_t>(it->second);
  }

  bool contains(SubsetMask m) const { return index_.count(m) != 0; }

  const std::vector<SubsetMask>& masks() const { return masks_; }

  // Largest member cardinality; 0 for the empty family.
  int max_set_size() const {
    int r = 0;
    for (SubsetMask m : masks_) r = std::max(r, set_size(m));
    return r;
  }

  auto begin() const { return masks_.begin(); }
  auto end() const { return masks_.end(); }

  friend bool operator==(const SetFamily& a, const SetFamily& b) { return a.masks_ == b.masks_; }
  friend bool operator!=(const SetFamily& a, const SetFamily& b) { return !(a == b); }

 private:
  std::vector<SubsetMask> masks_;
  std::unordered_map<SubsetMask, std::uint32_t> index_;
};

inline bool fits_ground(const SetFamily& fam, int n) {
  require_ground_size(n);
  const SubsetMask full = full_mask(n);
  for (SubsetMask m : fam)
    if (m & ~full) return false;
  return true;
}

// All subsets of members: { X : X subseteq Y for some Y in fam }. Every
// member of the result has all of its immediate subsets in the result too.
inline SetFamily down_closure(const SetFamily& fam) {
  std::unordered_set<SubsetMask> seen(fam.begin(), fam.end());
  std::vector<SubsetMask> stack(fam.begin(), fam.end());
  while (!stack.empty()) {
    SubsetMask m = stack.back();
    stack.pop_back();
    for (SubsetMask bits = m; bits; bits &= bits - 1) {
      SubsetMask child = m ^ (bits & (~bits + 1));
      if (seen.insert(child).second) stack.push_back(child);
    }
  }
  return SetFamily(std::vector<SubsetMask>(seen.begin(), seen.end()));
}

// All supersets of members within the ground set of size n.
inline SetFamily up_closure(const SetFamily& fam, int n) {
  if (!fits_ground(fam, n)) throw std::invalid_argument("family does not fit the ground set");
  const SubsetMask full = full_mask(n);
  std::unordered_set<SubsetMask> seen(fam.begin(), fam.end());
  std::vector<SubsetMask> stack(fam.begin(), fam.end());
  while (!stack.empty()) {
    SubsetMask m = stack.back();
    stack.pop_back();
    for (SubsetMask bits = full & ~m; bits; bits &= bits - 1) {
      SubsetMask parent = m | (bits & (~bits + 1));
      if (seen.insert(parent).second) stack.push_back(parent);
    }
  }
  return SetFamily(std::vector<SubsetMask>(seen.begin(), seen.end()));
}

// The family of all k-element subsets of {0, ..., n-1}, ascending. Uses the
// bit-twiddling successor (next mask with equal popcount); 64-bit locals keep
// the n = 32 boundary case clean.
inline SetFamily all_k_subsets(int n, int k) {
  require_ground_size(n);
  if (k < 0) throw std::invalid_argument("subset size out of range");
  if (k > n) return SetFamily{};  // no subsets that large
  if (k == 0) return SetFamily({SubsetMask{0}});
  std::vector<SubsetMask> out;
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  while (v < limit) {
    out.push_back(static_cast<SubsetMask>(v));
    std::uint64_t low = v & (~v + 1);
    std::uint64_t ripple = v + low;
    v = ripple | (((v ^ ripple) >> 2) / low);
  }
  return SetFamily(std::move(out));
}

// Complements every member within the ground set of size n.
inline SetFamily complement_family(const SetFamily& fam, int n) {
  if (!fits_ground(fam, n)) throw std::invalid_argument("family does not fit the ground set");
  const SubsetMask full = full_mask(n);
  std::vector<SubsetMask> out;
  out.reserve(fam.size());
  for (SubsetMask m : fam) out.push_back(m ^ full);
  return SetFamily(std::move(out));
}

// File format: one set per line as space-separated element indices; an empty
// line is the empty set; '#' starts a comment; blank-after-comment lines are
// skipped entirely. Duplicate sets in the file are an error. Returns the
// masks in file order (callers aligning per-line data need that order; the
// SetFamily constructor re-sorts).
inline std::vector<SubsetMask> parse_family_lines(std::istream& in) {
  std::vector<SubsetMask> masks;
  std::unordered_set<SubsetMask> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    bool had_comment = hash != std::string::npos;
    if (had_comment) line.erase(hash);
    // A line that is only whitespace is the empty set, unless it became blank
    // by stripping a comment (then it carries no set at all).
    std::istringstream ls(line);
    std::vector<int> elems;
    int e;
    if (!(ls >> e)) {
      if (had_comment) continue;
      bool all_space = line.find_first_not_of(" \t\r") == std::string::npos;
      if (!all_space)
        throw std::runtime_error("line " + std::to_string(lineno) + ": expected element indices");
      SubsetMask m = 0;
      if (!seen.insert(m).second)
        throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate set");
      masks.push_back(m);
      continue;
    }
    ls.clear();
    ls.seekg(0);
    while (ls >> e) elems.push_back(e);
    if (!ls.eof())
      throw std::runtime_error("line " + std::to_string(lineno) + ": bad element token");
    SubsetMask m = 0;
    for (int x : elems) {
      if (x < 0 || x >= kMaxGroundSize)
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": element out of range 0..31");
      SubsetMask bit = SubsetMask{1} << x;
      if (m & bit)
        throw std::runtime_error("line " + std::to_string(lineno) + ": repeated element " +
                                 std::to_string(x));
      m |= bit;
    }
    if (!seen.insert(m).second)
      throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate set");
    masks.push_back(m);
  }
  return masks;
}

inline SetFamily parse_family(std::istream& in) { return SetFamily(parse_family_lines(in)); }

inline void write_family(std::ostream& out, const SetFamily& fam) {
  for (SubsetMask m : fam) {
    bool first = true;
    for (int i = 0; i < kMaxGroundSize; ++i) {
      if (!(m >> i & 1u)) continue;
      if (!first) out << ' ';
      out << i;
      first = false;
    }
    out << '\n';
  }
}

// Smallest ground size every member fits in (largest element + 1); 0 for the
// empty family or the family {emptyset}.
inline int min_ground_size(const SetFamily& fam) {
  int n = 0;
  for (SubsetMask m : fam)
    if (m) n = std::max(n, 32 - std::countl_zero(m));
  return n;
}

}  // namespace itx
