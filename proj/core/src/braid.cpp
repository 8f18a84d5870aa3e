#include "kch/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "kch/error.hpp"

namespace kch {

BraidWord::BraidWord(int n, std::vector<int> word) : strands(n), letters(std::move(word)) {
  if (strands < 1) throw StructuralError("braid needs at least one strand");
  for (int l : letters) {
    if (l == 0 || std::abs(l) > strands - 1) {
      throw StructuralError("braid letter " + std::to_string(l) + " invalid on " + std::to_string(strands) + " strands");
    }
  }
}

BraidWord BraidWord::parse(std::string_view text, std::optional<int> n) {
  std::vector<int> letters;
  std::vector<std::size_t> positions;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view token = text.substr(start, i - start);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ParseError("invalid braid letter '" + std::string(token) + "'", start);
    }
    if (value == 0) throw ParseError("braid letter 0 is not a generator", start);
    letters.push_back(value);
    positions.push_back(start);
  }
  int strands = 1;
  for (int l : letters) strands = std::max(strands, std::abs(l) + 1);
  if (n) {
    if (*n < 1) throw ParseError("strand count must be positive", 0);
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (std::abs(letters[k]) >= *n) {
        throw ParseError("letter " + std::to_string(letters[k]) + " needs more than " + std::to_string(*n) + " strands",
                         positions[k]);
      }
    }
    strands = *n;
  }
  return BraidWord(strands, std::move(letters));
}

int BraidWord::writhe() const {
  int w = 0;
  for (int l : letters) w += l > 0 ? 1 : -1;
  return w;
}

std::string BraidWord::to_string() const {
  std::string s;
  for (int l : letters) {
    if (!s.empty()) s += ' ';
    s += std::to_string(l);
  }
  return s;
}

BraidWord inverse(const BraidWord& b) {
  std::vector<int> letters(b.letters.rbegin(), b.letters.rend());
  for (int& l : letters) l = -l;
  return BraidWord(b.strands, std::move(letters));
}

BraidWord concat(const BraidWord& b, const BraidWord& c) {
  std::vector<int> letters = b.letters;
  letters.insert(letters.end(), c.letters.begin(), c.letters.end());
  return BraidWord(std::max(b.strands, c.strands), std::move(letters));
}

BraidWord conjugate(const BraidWord& b, const BraidWord& w) {
  BraidWord r = concat(concat(w, b), inverse(w));
  r.strands = std::max(b.strands, w.strands);
  return r;
}

BraidWord stabilize(const BraidWord& b, int sign) {
  if (sign != 1 && sign != -1) throw StructuralError("stabilization sign must be +1 or -1");
  std::vector<int> letters = b.letters;
  letters.push_back(sign * b.strands);
  return BraidWord(b.strands + 1, std::move(letters));
}

ClosureInfo closure(const BraidWord& b) {
  const int n = b.strands;
  ClosureInfo info;
  info.strands = n;

  // perm = s_1 o ... o s_L: apply the last letter first.
  info.perm.resize(n);
  for (int i = 0; i < n; ++i) {
    int x = i;
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
      int k = std::abs(*it) - 1;
      if (x == k) x = k + 1;
      else if (x == k + 1) x = k;
    }
    info.perm[i] = x;
  }

  info.component_of.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    if (info.component_of[i] >= 0) continue;
    int c = static_cast<int>(info.components.size());
    std::vector<int> cycle;
    for (int x = i; info.component_of[x] < 0; x = info.perm[x]) {
      info.component_of[x] = c;
      cycle.push_back(x);
    }
    std::sort(cycle.begin(), cycle.end());
    info.components.push_back(std::move(cycle));
    info.leftmost.push_back(i);  // scanning left to right, i is the leftmost strand
  }

  // Track which strand occupies each position while reading the word.
  info.self_wr.assign(info.components.size(), 0);
  std::vector<int> at(n);
  for (int i = 0; i < n; ++i) at[i] = i;
  for (int l : b.letters) {
    int k = std::abs(l) - 1;
    int sign = l > 0 ? 1 : -1;
    info.wr_total += sign;
    int ca = info.component_of[at[k]], cb = info.component_of[at[k + 1]];
    if (ca == cb) info.self_wr[ca] += sign;
    else info.mixed_wr += sign;
    std::swap(at[k], at[k + 1]);
  }

  info.d.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int target = info.leftmost[info.component_of[i]];
    int steps = 0;
    for (int x = i; x != target; x = info.perm[x]) ++steps;
    info.d[i] = steps;
  }
  return info;
}

}  // namespace kch
