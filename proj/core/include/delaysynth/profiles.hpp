#pragma once

#include <vector>

#include "delaysynth/transducer.hpp"
#include "delaysynth/words.hpp"

namespace ds {

/// Identity-for-max bottom priority; only appears in the empty-word
/// profile, standing for "no priority seen on the empty run".
inline constexpr int kBottomPriority = -1;

struct ProfileTriple {
  int src;
  int dst;
  int pri;
  auto operator<=>(const ProfileTriple&) const = default;
};

/// Set of achievable state transformations (src, dst, max priority) for
/// some input block, over all output choices. Canonically sorted.
struct Profile {
  std::vector<ProfileTriple> triples;  // sorted, unique

  void canonicalize();
  auto operator<=>(const Profile&) const = default;
  bool contains(int src, int dst) const;
};

/// P_epsilon: {(q, q, bottom)} for every state q.
Profile identityProfile(const Transducer& t);

/// Exact profile of the single-letter word `a` (t normalized).
Profile letterProfile(const Transducer& t, Symbol a);

/// P1 (x) P2 = {(p, r, max(m, n)) | (p,q,m) in P1, (q,r,n) in P2}.
Profile profileMul(const Profile& p1, const Profile& p2);

Profile profileOfWord(const Transducer& t, const Word& u);

/// Max even priority among (src,dst,*) triples if any, else min odd.
/// Throws NoTransformation when no such triple exists.
int bestPriority(const Profile& p, int src, int dst);

/// Deterministic automaton over the input alphabet whose states are the
/// (x)-reachable profiles from P_epsilon.
struct ProfileAutomaton {
  std::vector<Symbol> alphabet;
  std::vector<Profile> profiles;       // state i <-> profile
  int initial = 0;                     // index of P_epsilon
  std::vector<std::vector<int>> next;  // [state][symIdx]
  std::vector<char> finiteClass;       // L(P) finite?

  int symIndex(Symbol a) const;
  int run(const Word& u) const;
};

ProfileAutomaton buildProfileAutomaton(const Transducer& t);

bool isProfileLanguageFinite(const ProfileAutomaton& pa, const Profile& p);

/// Length of the longest word whose profile has a finite language class.
int computeEll(const ProfileAutomaton& pa);

}  // namespace ds
