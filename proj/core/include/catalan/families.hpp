#ifndef CATALAN_FAMILIES_HPP_
#define CATALAN_FAMILIES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catalan/pinj.hpp"

namespace catalan {

  enum class FamilyKind {
    ic,        // all isotone decreasing partial injections
    qprime,    // IC_n maps whose domain omits 1
    sym_inv,   // the symmetric inverse monoid I_n
    k_ideal,   // IC_n maps of height <= p
    m_ideal,   // Q'_n maps of height <= p
    rees_ic,   // K(n, p) / K(n, p - 1)
    rees_q     // M(n, p) / M(n, p - 1)
  };

  // Short name used on the command line and in reports ("icn", "reesq", ...).
  std::string_view to_string(FamilyKind kind) noexcept;
  std::optional<FamilyKind> family_kind_from_string(std::string_view name);

  bool needs_height_bound(FamilyKind kind) noexcept;
  // True for the two families whose domains omit 1.
  bool is_qprime_side(FamilyKind kind) noexcept;
  bool is_rees(FamilyKind kind) noexcept;

  struct FamilySpec {
    FamilyKind         kind = FamilyKind::ic;
    int                n    = 1;
    std::optional<int> p;

    static FamilySpec ic(int n) {
      return {FamilyKind::ic, n, std::nullopt};
    }
    static FamilySpec qprime(int n) {
      return {FamilyKind::qprime, n, std::nullopt};
    }
    static FamilySpec sym_inv(int n) {
      return {FamilyKind::sym_inv, n, std::nullopt};
    }
    static FamilySpec k_ideal(int n, int p) {
      return {FamilyKind::k_ideal, n, p};
    }
    static FamilySpec m_ideal(int n, int p) {
      return {FamilyKind::m_ideal, n, p};
    }
    static FamilySpec rees_ic(int n, int p) {
      return {FamilyKind::rees_ic, n, p};
    }
    static FamilySpec rees_q(int n, int p) {
      return {FamilyKind::rees_q, n, p};
    }

    // Throws ValidationError unless the height bound fits the family:
    // 1 <= p <= n for k_ideal/rees_ic and 1 <= p <= n - 1 for
    // m_ideal/rees_q; no p for the other families.
    void validate() const;

    // e.g. "icn(4)" or "reesq(5,2)".
    std::string name() const;

    bool operator==(FamilySpec const&) const = default;
  };

  // Membership in the family's defining predicate. For Rees quotients
  // this tests the nonzero elements (height exactly p).
  bool is_member(PartialInjection const& alpha, FamilySpec const& spec);

  //! All members of the family, sorted by (height, canonical text).
  //!
  //! Does not build products, so it is usable where a Cayley table would not
  //! fit. Throws ResourceError if spec.n exceeds cap.
  std::vector<PartialInjection> enumerate_members(FamilySpec const& spec,
                                                  int               cap = 12);

  class SemigroupTable {
   public:
    using Index = std::uint32_t;

    static constexpr int         kDefaultCap = 12;
    // Tables up to this order keep a dense Cayley table.
    static constexpr std::size_t kDenseLimit = 2048;

    //! Enumerates a family into an indexed table.
    //!
    //! Elements are sorted by (height, canonical text); for Rees quotients a
    //! zero sentinel with text "0" occupies index 0.
    static SemigroupTable enumerate(FamilySpec const& spec,
                                    int               cap = kDefaultCap);

    //! A synthetic table with opaque labels and an explicit Cayley table in
    //! row-major order (product(i, j) = cayley[i * size + j]).
    static SemigroupTable from_cayley(std::string              name,
                                      std::vector<std::string> labels,
                                      std::vector<Index>       cayley);

    std::size_t size() const noexcept {
      return _labels.size();
    }

    Index product(Index i, Index j) const;

    std::optional<Index> zero_index() const noexcept {
      return _zero;
    }
    std::optional<Index> identity_index() const noexcept {
      return _identity;
    }

    // Family descriptor; absent for synthetic tables.
    std::optional<FamilySpec> const& family() const noexcept {
      return _family;
    }
    std::string const& name() const noexcept {
      return _name;
    }

    // Canonical text of element i ("0" for the Rees zero sentinel).
    std::string const& text(Index i) const {
      return _labels.at(i);
    }

    bool has_elements() const noexcept {
      return !_elements.empty();
    }
    bool is_zero_sentinel(Index i) const noexcept {
      return _sentinel && i == *_zero;
    }

    // Throws UnsupportedError for the zero sentinel or synthetic tables.
    PartialInjection const& element(Index i) const;

    // Height of element i; -1 for the Rees zero sentinel and synthetic tables.
    int height(Index i) const;

    std::optional<Index> index_of(PartialInjection const& alpha) const;
    std::optional<Index> index_of_text(std::string_view text) const;

    bool is_idempotent(Index i) const {
      return product(i, i) == i;
    }

    std::vector<Index> idempotents() const;

   private:
    SemigroupTable() = default;
    void  build_products();
    void  find_identity();
    Index rees_or_plain(std::size_t i, std::size_t j) const;

    std::string                                     _name;
    std::optional<FamilySpec>                       _family;
    std::vector<PartialInjection>                   _elements;
    std::vector<std::string>                        _labels;
    std::unordered_map<PartialInjection, Index>     _index;
    std::vector<Index>                              _cayley;
    std::optional<Index>                            _zero;
    std::optional<Index>                            _identity;
    bool                                            _sentinel = false;
  };

  using Index = SemigroupTable::Index;

  //! Product in a Rees quotient: the composite if it has height exactly p,
  //! otherwise the zero sentinel. Throws ValidationError for other tables.
  Index rees_product(SemigroupTable const& table, Index i, Index j);

}  // namespace catalan

#endif  // CATALAN_FAMILIES_HPP_
