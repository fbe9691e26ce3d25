#ifndef CATALAN_PINJ_HPP_
#define CATALAN_PINJ_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catalan {

  // Largest chain size a PartialInjection can hold.
  inline constexpr int kMaxDegree = 16;

  //! A partial injective map of the chain [n] = {1, ..., n}.
  //!
  //! Points are 1-based in every public member. The map is stored as a
  //! fixed-length image table so that composition is linear in n and
  //! equality is structural.
  class PartialInjection {
   public:
    using Pair = std::pair<int, int>;

    PartialInjection() = default;

    // The empty map of [n].
    explicit PartialInjection(int n);

    static PartialInjection identity(int n);
    static PartialInjection partial_identity(int n, std::span<int const> points);

    //! Builds the map with x -> a for every listed (x, a).
    //!
    //! Throws RangeError if a coordinate lies outside [1, n] and
    //! InjectivityError if an x or an a is repeated.
    static PartialInjection from_pairs(int n, std::span<Pair const> pairs);
    static PartialInjection from_pairs(int n, std::initializer_list<Pair> pairs);

    int degree() const noexcept {
      return _n;
    }

    // Image of x, or nullopt if x is not in the domain.
    std::optional<int> operator()(int x) const;

    bool defined_at(int x) const;

    int height() const noexcept;

    std::vector<int>  domain() const;
    std::vector<int>  image() const;
    std::vector<int>  fixed_points() const;
    std::vector<Pair> pairs() const;
    int               shift() const noexcept;

    // Bit x-1 set iff x is in the domain (resp. image).
    std::uint32_t domain_mask() const noexcept;
    std::uint32_t image_mask() const noexcept;

    // The inverse partial injection (image <-> domain).
    PartialInjection inverse() const;

    std::size_t hash() const noexcept;

    bool operator==(PartialInjection const&) const = default;

   private:
    friend PartialInjection compose(PartialInjection const&,
                                    PartialInjection const&);

    static constexpr std::uint8_t kUndefined = 0xFF;

    std::uint8_t                           _n = 0;
    std::array<std::uint8_t, kMaxDegree> _img{fill_undefined()};

    static constexpr std::array<std::uint8_t, kMaxDegree> fill_undefined() {
      std::array<std::uint8_t, kMaxDegree> a{};
      a.fill(kUndefined);
      return a;
    }
  };

  //! Left-to-right composition: x(alpha beta) = (x alpha) beta.
  //!
  //! Throws ChainMismatchError if the degrees differ.
  PartialInjection compose(PartialInjection const& alpha,
                           PartialInjection const& beta);

  inline PartialInjection operator*(PartialInjection const& alpha,
                                    PartialInjection const& beta) {
    return compose(alpha, beta);
  }

  bool is_isotone(PartialInjection const& alpha) noexcept;
  bool is_decreasing(PartialInjection const& alpha) noexcept;
  bool is_idempotent(PartialInjection const& alpha);
  // alpha^2 is idempotent, equivalently alpha^4 = alpha^2.
  bool is_quasi_idempotent(PartialInjection const& alpha);

  // Shift 1 and the single moved point y is sent to y - 1.
  bool is_essential(PartialInjection const& alpha);

  //! If alpha shifts an initial block {2, ..., i} down by one and fixes
  //! every other domain point (all of which exceed i), returns i.
  //! The fixed part may be empty.
  std::optional<int> requisite_block_end(PartialInjection const& alpha);

  inline bool is_requisite(PartialInjection const& alpha) {
    return requisite_block_end(alpha).has_value();
  }

  enum class ElementKind {
    idempotent,
    essential,
    requisite,
    quasi_idempotent_shift_1,
    other
  };

  std::string_view to_string(ElementKind kind) noexcept;

  //! Most specific kind of an isotone decreasing partial injection, in the
  //! priority order idempotent > essential > requisite >
  //! quasi_idempotent_shift_1 > other.
  ElementKind classify(PartialInjection const& alpha);

  //! Canonical text "n:x>a,x>a,..." with pairs ascending by x.
  std::string canonical_text(PartialInjection const& alpha);

  //! Parses the canonical grammar `<n> ":" [<x> ">" <a> {"," <x> ">" <a>}]`.
  //! Pairs need not be sorted. Throws ParseError (with the offending
  //! position) on malformed input, duplicate x or duplicate a.
  PartialInjection parse_text(std::string_view text);

}  // namespace catalan

template <>
struct std::hash<catalan::PartialInjection> {
  std::size_t operator()(catalan::PartialInjection const& x) const noexcept {
    return x.hash();
  }
};

#endif  // CATALAN_PINJ_HPP_
