#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kch {

/// A word in the Artin generators. Letter +k is sigma_k, -k its inverse,
/// with 1 <= k <= strands - 1.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  /// Validates every letter; throws StructuralError on violations.
  BraidWord(int strands, std::vector<int> letters);

  /// Whitespace-separated nonzero integers. Without `strands`, the strand
  /// count is max|letter| + 1 (1 for the empty word).
  static BraidWord parse(std::string_view text, std::optional<int> strands = std::nullopt);

  int writhe() const;
  std::string to_string() const;
  bool operator==(const BraidWord&) const = default;
};

/// w . b . w^-1 as a literal word (no free reduction). The conjugator may use
/// fewer strands than b.
BraidWord conjugate(const BraidWord& b, const BraidWord& w);
/// Adds a strand and appends sigma_n^sign, sign = +1 or -1.
BraidWord stabilize(const BraidWord& b, int sign);
/// The letters of b followed by the letters of c; strand count is the max.
BraidWord concat(const BraidWord& b, const BraidWord& c);
BraidWord inverse(const BraidWord& b);

/// Closure combinatorics. Strands are 0-based here.
///
/// `perm[i]` is the image of strand i under the braid permutation, composed
/// so that perm = s_1 o s_2 o ... o s_L for the word s_1 s_2 ... s_L.
/// Components are the cycles of perm, numbered by their leftmost strand.
struct ClosureInfo {
  int strands = 0;
  std::vector<int> perm;
  std::vector<std::vector<int>> components;  // each sorted ascending
  std::vector<int> component_of;             // strand -> component
  std::vector<int> leftmost;                 // component -> strand
  int wr_total = 0;
  std::vector<int> self_wr;                  // component -> self-writhe
  int mixed_wr = 0;                          // signed count of crossings between different components
  std::vector<int> d;                        // least d >= 0 with perm^d(i) = leftmost of i's component

  std::size_t component_count() const { return components.size(); }
  bool is_knot() const { return components.size() == 1; }
  /// d(j) - d(i)
  int k(int i, int j) const { return d[j] - d[i]; }
};

ClosureInfo closure(const BraidWord& b);

}  // namespace kch
