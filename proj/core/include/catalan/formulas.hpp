#ifndef CATALAN_FORMULAS_HPP_
#define CATALAN_FORMULAS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "catalan/families.hpp"

namespace catalan::formulas {

  // Exact binomial coefficient; 0 when k < 0, k > n or n < 0.
  // Throws OverflowError if the value does not fit.
  std::uint64_t binomial(int n, int k);

  // c_n = C(2n, n - 1) / n. Throws RangeError for n < 1.
  std::uint64_t catalan(int n);

  //! t_n = c_{n+1} - c_n, cross-checked against 3 C(2n, n - 1) / (n + 2).
  //! Throws Error if the two closed forms disagree.
  std::uint64_t t(int n);

  //! Closed-form rank where one is known for the family:
  //!   icn: 2n;  qprime: n^2 - 3n + 4 (n > 1);
  //!   kideal, reesic (1 <= p <= n - 1): (n - 1) C(n - 2, p - 1) + C(n, p);
  //!   mideal, reesq (1 <= p <= n - 2): C(n, p) + (n - 2) C(n - 3, p - 1).
  std::optional<std::uint64_t> rank_formula(FamilySpec const& spec);

  enum class CountKind {
    idempotents,     // per height (or total)
    essentials,      // per height (or total); Q' excludes requisites
    requisites,      // Q' only
    generators,      // |G(p)| of the Rees quotient
    maximal,         // number of maximal subsemigroups
    l_star_classes,  // L*-classes of height p
    r_star_classes   // R*-classes of height p
  };

  std::string_view to_string(CountKind kind) noexcept;

  //! Closed-form count for the family; p selects one height (or the Rees
  //! height), nullopt asks for the total. Absent when no formula is known.
  std::optional<std::uint64_t> count_formula(CountKind               kind,
                                             FamilySpec const&       spec,
                                             std::optional<int>      p = {});

  struct SequencePrefix {
    std::string_view              name;
    int                           offset;
    std::span<std::uint64_t const> terms;

    // Term with index i (offset-based); nullopt outside the prefix.
    std::optional<std::uint64_t> at(int i) const;
  };

  SequencePrefix a000245();  // 3 (2n)! / ((n + 2)! (n - 1)!), from n = 0
  SequencePrefix a001787();  // n 2^(n - 1), from n = 0
  SequencePrefix a000108();  // Catalan numbers, from n = 0
  // Triangles flattened by rows.
  SequencePrefix a007318();  // Pascal's triangle, rows 0..10
  SequencePrefix a003506();  // n C(n - 1, k - 1), rows 1..10

  // Row-and-column access for the flattened triangles above.
  std::optional<std::uint64_t> pascal_entry(int row, int k);
  std::optional<std::uint64_t> a003506_entry(int row, int k);

}  // namespace catalan::formulas

#endif  // CATALAN_FORMULAS_HPP_
