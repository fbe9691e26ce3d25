#ifndef CATALAN_GREENS_HPP_
#define CATALAN_GREENS_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "catalan/bitset.hpp"
#include "catalan/families.hpp"
#include "catalan/partition.hpp"

namespace catalan {

  enum class Relation { L, R, H, D, J, Ls, Rs, Hs, Ds, Js };

  // "L", "R", ..., "Ls", "Rs", ... as used on the command line.
  std::string_view        to_string(Relation r) noexcept;
  std::optional<Relation> relation_from_string(std::string_view name);
  bool                    is_starred(Relation r) noexcept;

  // Principal ideals over S^1 (a formal identity is used when S has none).
  std::vector<DynamicBitset> principal_left_ideals(SemigroupTable const& S);
  std::vector<DynamicBitset> principal_right_ideals(SemigroupTable const& S);
  std::vector<DynamicBitset> principal_ideals(SemigroupTable const& S);

  //! Green's relation L, R, H, D or J from principal ideals.
  //!
  //! D is the join of L and R; in a finite semigroup it coincides with J.
  IndexPartition green(SemigroupTable const& S, Relation which);

  //! a L* b iff for all x, y in S^1: ax = ay <=> bx = by.
  IndexPartition starred_L(SemigroupTable const& S);
  //! a R* b iff for all x, y in S^1: xa = ya <=> xb = yb.
  IndexPartition starred_R(SemigroupTable const& S);
  IndexPartition starred_H(SemigroupTable const& S);
  // Join of L* and R*.
  IndexPartition starred_D(SemigroupTable const& S);

  //! Principal *-ideals: the least ideal containing a that is a union of
  //! L*-classes and of R*-classes, grown to a fixpoint.
  std::vector<DynamicBitset> star_ideals(SemigroupTable const& S);
  IndexPartition             starred_J(SemigroupTable const& S);

  // Dispatches to one of the above.
  IndexPartition relation_partition(SemigroupTable const& S, Relation which);

}  // namespace catalan

#endif  // CATALAN_GREENS_HPP_
