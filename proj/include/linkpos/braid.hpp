#pragma once

#include <string>
#include <utility>
#include <vector>

#include "linkpos/errors.hpp"

namespace linkpos {

// A word in the Artin generators of the braid group B_n. Letters are signed
// generator indices: +i crosses the strands at positions i, i+1 positively,
// -i negatively. Letters act left to right as position transpositions; no
// free reduction or Markov moves are ever applied, every formula in this
// library is word-level.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

// Text format "B<n>: j1 j2 ... jk" (whitespace-separated signed integers).
// "B1:" is the empty word on one strand.
BraidWord parse_braid(const std::string& text);
std::string serialize_braid(const BraidWord& b);

// Throws MalformedBraid / GeneratorOutOfRange when b is not a valid word.
void validate_braid(const BraidWord& b);

// Symmetric integer matrix of pairwise linking numbers, indexed by closure
// components. Entry (p,q) is half the signed count of mixed crossings
// between components p and q; the diagonal is zero.
struct LinkingMatrix {
  std::vector<std::vector<int>> entries;

  int size() const { return static_cast<int>(entries.size()); }
  long long total() const;      // sum of entries over i < j
  long long abs_total() const;  // sum of |entries| over i < j
  bool any_negative() const;

  bool operator==(const LinkingMatrix&) const = default;
};

// A partition of the closure components {0, .., l-1} into disjoint blocks.
using ComponentPartition = std::vector<std::vector<int>>;

struct BraidProfile {
  int strands = 0;
  int length = 0;
  int writhe = 0;
  int self_linking = 0;  // writhe - strands
  // permutation[s-1] = final position of the strand starting at position s.
  std::vector<int> permutation;
  // Closure components as sorted strand sets, ordered by minimal strand.
  std::vector<std::vector<int>> component_cycles;
  bool is_positive = false;
  bool is_pure = false;
  // The alternation conditions: (i) every generator appears, (ii) each
  // generator keeps one sign, (iii) adjacent generators take opposite signs.
  // is_alternating captures (ii) and (iii); is_nonsplit_alternating adds (i).
  bool is_alternating = false;
  bool is_nonsplit_alternating = false;
};

BraidProfile braid_profile(const BraidWord& b);

// Restriction of b to the strands of the selected component cycles (indices
// into braid_profile.component_cycles). Kept strand positions are renumbered
// order-preservingly; a letter survives only if both strands it crosses are
// kept.
BraidWord sub_braid(const BraidWord& b, const std::vector<int>& keep_cycles);

// Linking matrix of the closure, indexed by component cycles.
LinkingMatrix braid_linking_matrix(const BraidWord& b);

// The identity sl(b) - sum_i sl(b_i) = 2 sum_{p<q} lk(block_p, block_q),
// where b_i are the sub-braids of the partition blocks. holds is always true
// for genuine inputs; a false value would certify an implementation bug.
struct KeyLemmaRecord {
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
  std::vector<long long> block_self_linking;
  long long total_self_linking = 0;
};

KeyLemmaRecord key_lemma_identity(const BraidWord& b,
                                  const ComponentPartition& partition);

// Quasi-positive embedding: after every negative letter -i the word
// w = (n, n-1, .., i, i, .., n-1, n) is inserted, producing a word in
// B_{n+1} whose closure adds one unknotted component. Each factor of the
// decomposition is either a plain positive generator (empty conjugator) or
// a conjugate c g c^{-1} with all-negative conjugator c and positive
// generator g, so the factor word itself is a conjugate of a positive
// generator. Concatenating all factor words and cancelling adjacent inverse
// pairs reproduces the output word letter for letter.
struct QuasipositiveEmbedding {
  struct Factor {
    std::vector<int> conjugator;  // empty => plain generator factor
    int generator = 0;            // always > 0
  };

  BraidWord input;
  BraidWord output;
  // (index of the negative letter in the input word, inserted word)
  std::vector<std::pair<int, std::vector<int>>> insertions;
  std::vector<Factor> decomposition;
  // lk(new component, rest) = sum over negative letters of (n - i + 1).
  long long new_component_linking = 0;
};

QuasipositiveEmbedding embed_quasipositive(const BraidWord& b);

// Letters of a decomposition factor: conjugator + generator + conjugator
// inverse (reversed and negated).
std::vector<int> factor_letters(const QuasipositiveEmbedding::Factor& f);

// Concatenates all factor words, cancelling the inverse pairs that arise
// between consecutive conjugate factors; the result equals the embedded
// output word letter for letter.
std::vector<int> decomposition_product(
    const std::vector<QuasipositiveEmbedding::Factor>& factors);

}  // namespace linkpos
