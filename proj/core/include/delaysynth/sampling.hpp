#pragma once

#include <optional>
#include <random>

#include "delaysynth/automata.hpp"
#include "delaysynth/words.hpp"

namespace ds {

using Rng = std::mt19937_64;

/// Uniform random lasso over `alphabet` with given length bounds.
Lasso randomLasso(const std::vector<Symbol>& alphabet, Rng& rng,
                  int maxPrefix = 6, int maxPeriod = 6);

Word randomWord(const std::vector<Symbol>& alphabet, Rng& rng, int maxLen);

/// Random lasso in L(d): random walk through live states, then a
/// constructed accepting cycle. Empty when L(d) is empty.
std::optional<Lasso> sampleAcceptedLasso(const Dpa& d, Rng& rng,
                                         int maxPrefix = 8);

}  // namespace ds
