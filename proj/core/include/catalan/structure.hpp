#ifndef CATALAN_STRUCTURE_HPP_
#define CATALAN_STRUCTURE_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "catalan/families.hpp"
#include "catalan/partition.hpp"

namespace catalan {

  //! Outcome of a structural property check.
  //!
  //! When holds is false, witness lists the elements (canonical text) that
  //! demonstrate the failure, e.g. an L*-class without an idempotent.
  struct PropertyReport {
    std::string              property;
    std::string              family;
    bool                     holds = false;
    std::vector<std::string> witness;
    std::string              note;
  };

  std::vector<Index> regular_elements(SemigroupTable const& S);
  PropertyReport     is_regular_semigroup(SemigroupTable const& S);
  PropertyReport     is_j_trivial(SemigroupTable const& S);

  // Every L*-class (resp. R*-class) contains an idempotent.
  PropertyReport is_left_abundant(SemigroupTable const& S);
  PropertyReport is_right_abundant(SemigroupTable const& S);
  PropertyReport is_abundant(SemigroupTable const& S);

  // E(S) is a commutative subsemigroup.
  PropertyReport is_semilattice_of_idempotents(SemigroupTable const& S);
  PropertyReport is_adequate(SemigroupTable const& S);
  PropertyReport is_right_adequate(SemigroupTable const& S);

  //! ea = a(ea)* and ae = (ae)^+ a for every a and idempotent e, where x* and
  //! x^+ are the idempotents L*- and R*-related to x.
  //!
  //! A starred class without a unique idempotent is reported as a failed
  //! precondition (holds = false, note says so, witness is the class).
  PropertyReport is_ample(SemigroupTable const& S);
  // Only ae = (ae)^+ a; needs unique idempotents in R*-classes.
  PropertyReport is_right_ample(SemigroupTable const& S);

  //! Every R*-class contains exactly one idempotent.
  PropertyReport unique_idempotent_per_r_class(SemigroupTable const& S);

  //! U is an inverse ideal of S: each u has u' in S with uu'u = u and both
  //! u'u, uu' in U. The right variant drops the u'u condition.
  //!
  //! Throws ValidationError if some element of sub is not in super.
  PropertyReport is_inverse_ideal(SemigroupTable const& sub,
                                  SemigroupTable const& super);
  PropertyReport is_right_inverse_ideal(SemigroupTable const& sub,
                                        SemigroupTable const& super);

  struct IdempotentCensus {
    std::map<int, std::size_t> per_height;
    std::size_t                total = 0;  // nonzero-sentinel idempotents
    bool                       zero_sentinel_idempotent = false;
  };

  IdempotentCensus idempotent_census(SemigroupTable const& S);

}  // namespace catalan

#endif  // CATALAN_STRUCTURE_HPP_
