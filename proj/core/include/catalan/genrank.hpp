#ifndef CATALAN_GENRANK_HPP_
#define CATALAN_GENRANK_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catalan/bitset.hpp"
#include "catalan/families.hpp"
#include "catalan/pinj.hpp"

namespace catalan {

  //! The subsemigroup generated by gens, as sorted indices (BFS over right
  //! multiplication by generators).
  std::vector<Index> closure(SemigroupTable const& S, std::vector<Index> const& gens);

  //! Elements a with no b, c in S \ {a} such that a = bc.
  //!
  //! With strict_distinct_factors the factors must also satisfy b != c,
  //! which is the literal reading of the textbook definition.
  std::vector<Index> indecomposables(SemigroupTable const& S,
                                     bool strict_distinct_factors = false);

  struct GeneratorReport {
    std::string              family;
    std::vector<std::string> identity;
    std::vector<std::string> idempotents;
    std::vector<std::string> essentials;
    std::vector<std::string> requisites;
    std::vector<std::string> other;
    std::vector<Index>       generators;
    std::size_t              rank = 0;
    std::optional<std::uint64_t> formula;
    std::optional<bool>          agrees;
    // Set when S is not J-trivial and a greedy minimal set was used.
    bool greedy_fallback = false;
  };

  //! A generating set that is minimal under inclusion, grouped by kind.
  //!
  //! For a J-trivial table this is the set of indecomposables, which is
  //! contained in every generating set, so its size is the rank. The result
  //! is verified: the closure is S and no generator lies in the closure of
  //! the others.
  GeneratorReport minimal_generating_set(SemigroupTable const& S);

  //! Brute-force rank of the family paired with its closed form.
  GeneratorReport rank_check(FamilySpec const& spec, int cap = 12);

  //! Factors alpha (height p >= 1) as eps_1 ... eps_p where eps_i fixes
  //! a_1..a_{i-1} and x_{i+1}..x_p and sends x_i to a_i. Each factor has
  //! height p and is an idempotent or a shift-1 quasi-idempotent.
  //! The empty map yields an empty list.
  std::vector<PartialInjection> factor_idempotent_quasi_chain(
      PartialInjection const& alpha);

  //! Writes a shift-1 quasi-idempotent whose moved point y drops by s as
  //! the product of s essential elements, listed in composition order.
  //! Throws ContractError for any other input.
  std::vector<PartialInjection> expand_quasi_to_essentials(
      PartialInjection const& eps);

  //! Idempotent and essential factors of an IC_n element, each of height
  //! h(alpha): the quasi-idempotent chain with every quasi factor expanded.
  std::vector<PartialInjection> factor_into_generators(
      PartialInjection const& alpha);

  struct RequisiteFactorization {
    PartialInjection beta;       // same domain as alpha, 1 not in its image
    PartialInjection requisite;  // the requisite element with im = im alpha
  };

  //! alpha = beta * requisite for alpha in Q'_n with 1 in its image.
  //! Throws ContractError if alpha is not in Q'_n or 1 is not in its image.
  RequisiteFactorization factor_requisite(PartialInjection const& alpha);

  //! Two elements of height h(alpha) + 1 whose product is alpha.
  //!
  //! For IC_n alpha must be an idempotent or an essential element of height
  //! at most n - 2; for Q'_n an idempotent, essential or requisite element of
  //! height at most n - 3. Throws ContractError otherwise.
  std::pair<PartialInjection, PartialInjection> lift_height(
      PartialInjection const& alpha,
      FamilyKind              family);

  struct MaximalSubsemigroup {
    Index removed;
    bool  closed = false;
    bool  maximal = false;
  };

  //! The maximal subsemigroups S \ {g}, one per indecomposable g.
  //!
  //! Each is checked for closure. Maximality is certified by checking that
  //! the indecomposables generate S, so every proper subsemigroup misses one
  //! of them. Throws UnsupportedError if S is not J-trivial.
  std::vector<MaximalSubsemigroup> maximal_subsemigroups(SemigroupTable const& S);

  //! Every maximal subsemigroup by exhaustive search over all subsets, each
  //! returned as the bitset of its members. Throws ResourceError above
  //! max_size elements.
  std::vector<DynamicBitset> maximal_subsemigroups_exhaustive(
      SemigroupTable const& S,
      std::size_t           max_size = 16);

  // True when the members of the set are closed under the product.
  bool is_closed(SemigroupTable const& S, DynamicBitset const& members);

}  // namespace catalan

#endif  // CATALAN_GENRANK_HPP_
