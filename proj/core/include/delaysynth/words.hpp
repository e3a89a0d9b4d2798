#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ds {

using Symbol = char;
using Word = std::string;

/// Ultimately periodic omega-word prefix.period^omega.
/// The only omega-word interface of the toolkit.
struct Lasso {
  Word prefix;
  Word period;  // non-empty

  bool wellFormed() const { return !period.empty(); }

  /// Letter at absolute position i.
  Symbol at(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return period[(i - prefix.size()) % period.size()];
  }

  /// Canonical index of position i inside prefix+period.
  std::size_t phase(std::size_t i) const {
    if (i < prefix.size()) return i;
    return prefix.size() + (i - prefix.size()) % period.size();
  }

  std::string text() const { return prefix + "|" + period; }
};

struct PairLasso {
  Lasso input;
  Lasso output;
};

/// Lasso over pairs (domain priority, transformation priority).
struct PriorityPairLasso {
  std::vector<std::pair<int, int>> prefix;
  std::vector<std::pair<int, int>> period;
};

/// Denote the same omega-word? (unrolls both far enough to compare)
bool sameOmegaWord(const Lasso& a, const Lasso& b);

}  // namespace ds
