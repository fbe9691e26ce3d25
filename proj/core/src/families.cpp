#include "catalan/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

#include "catalan/errors.hpp"

namespace catalan {

  std::string_view to_string(FamilyKind kind) noexcept {
    switch (kind) {
      case FamilyKind::ic:
        return "icn";
      case FamilyKind::qprime:
        return "qprime";
      case FamilyKind::sym_inv:
        return "syminv";
      case FamilyKind::k_ideal:
        return "kideal";
      case FamilyKind::m_ideal:
        return "mideal";
      case FamilyKind::rees_ic:
        return "reesic";
      case FamilyKind::rees_q:
        return "reesq";
    }
    return "?";
  }

  std::optional<FamilyKind> family_kind_from_string(std::string_view name) {
    for (auto kind : {FamilyKind::ic,
                      FamilyKind::qprime,
                      FamilyKind::sym_inv,
                      FamilyKind::k_ideal,
                      FamilyKind::m_ideal,
                      FamilyKind::rees_ic,
                      FamilyKind::rees_q}) {
      if (to_string(kind) == name) {
        return kind;
      }
    }
    return std::nullopt;
  }

  bool needs_height_bound(FamilyKind kind) noexcept {
    return kind == FamilyKind::k_ideal || kind == FamilyKind::m_ideal
           || kind == FamilyKind::rees_ic || kind == FamilyKind::rees_q;
  }

  bool is_qprime_side(FamilyKind kind) noexcept {
    return kind == FamilyKind::qprime || kind == FamilyKind::m_ideal
           || kind == FamilyKind::rees_q;
  }

  bool is_rees(FamilyKind kind) noexcept {
    return kind == FamilyKind::rees_ic || kind == FamilyKind::rees_q;
  }

  void FamilySpec::validate() const {
    if (n < 1 || n > kMaxDegree) {
      throw ValidationError("chain size " + std::to_string(n)
                            + " is out of range");
    }
    if (!needs_height_bound(kind)) {
      if (p) {
        throw ValidationError(std::string(to_string(kind))
                              + " takes no height bound");
      }
      return;
    }
    if (!p) {
      throw ValidationError(std::string(to_string(kind))
                            + " requires a height bound p");
    }
    int const hi = is_qprime_side(kind) ? n - 1 : n;
    if (*p < 1 || *p > hi) {
      throw ValidationError("height bound p = " + std::to_string(*p)
                            + " must lie in [1, " + std::to_string(hi)
                            + "] for " + std::string(to_string(kind)));
    }
  }

  std::string FamilySpec::name() const {
    std::string result = std::string(to_string(kind)) + "("
                         + std::to_string(n);
    if (p) {
      result += "," + std::to_string(*p);
    }
    return result + ")";
  }

  bool is_member(PartialInjection const& alpha, FamilySpec const& spec) {
    if (alpha.degree() != spec.n) {
      return false;
    }
    if (spec.kind == FamilyKind::sym_inv) {
      return true;
    }
    if (!is_isotone(alpha) || !is_decreasing(alpha)) {
      return false;
    }
    if (is_qprime_side(spec.kind) && alpha.defined_at(1)) {
      return false;
    }
    switch (spec.kind) {
      case FamilyKind::k_ideal:
      case FamilyKind::m_ideal:
        return alpha.height() <= *spec.p;
      case FamilyKind::rees_ic:
      case FamilyKind::rees_q:
        return alpha.height() == *spec.p;
      default:
        return true;
    }
  }

  namespace {
    using Pair = PartialInjection::Pair;

    // Calls emit for every isotone decreasing assignment of increasing
    // images a_1 < ... < a_k with a_i <= x_i to the sorted domain.
    template <typename Emit>
    void isotone_images(std::vector<int> const& dom,
                        std::vector<Pair>&      pairs,
                        std::size_t             i,
                        int                     lo,
                        Emit&&                  emit) {
      if (i == dom.size()) {
        emit(pairs);
        return;
      }
      for (int a = lo; a <= dom[i]; ++a) {
        pairs.emplace_back(dom[i], a);
        isotone_images(dom, pairs, i + 1, a + 1, emit);
        pairs.pop_back();
      }
    }

    template <typename Emit>
    void all_injections(int n, std::vector<int> const& dom, Emit&& emit) {
      std::size_t const k = dom.size();
      // Every k-subset of [n] as the image, in every order.
      for (std::uint32_t imask = 0; imask < (1u << n); ++imask) {
        if (static_cast<std::size_t>(std::popcount(imask)) != k) {
          continue;
        }
        std::vector<int> img;
        for (int a = 0; a < n; ++a) {
          if (imask & (1u << a)) {
            img.push_back(a + 1);
          }
        }
        do {
          std::vector<Pair> pairs;
          for (std::size_t i = 0; i < k; ++i) {
            pairs.emplace_back(dom[i], img[i]);
          }
          emit(pairs);
        } while (std::next_permutation(img.begin(), img.end()));
      }
    }

    struct Keyed {
      int              height;
      std::string      text;
      PartialInjection element;
    };
  }  // namespace

  std::vector<PartialInjection> enumerate_members(FamilySpec const& spec,
                                                  int               cap) {
    spec.validate();
    if (spec.n > cap || spec.n > 12) {
      throw ResourceError("chain size " + std::to_string(spec.n)
                          + " exceeds the enumeration cap "
                          + std::to_string(std::min(cap, 12)));
    }
    int const n = spec.n;
    int       min_height = 0, max_height = n;
    if (needs_height_bound(spec.kind)) {
      max_height = *spec.p;
      if (is_rees(spec.kind)) {
        min_height = *spec.p;
      }
    }
    std::vector<Keyed> found;
    auto               emit = [&](std::vector<Pair> const& pairs) {
      auto alpha = PartialInjection::from_pairs(n, pairs);
      found.push_back({alpha.height(), canonical_text(alpha), alpha});
    };
    for (std::uint32_t dmask = 0; dmask < (1u << n); ++dmask) {
      int const h = std::popcount(dmask);
      if (h < min_height || h > max_height) {
        continue;
      }
      if (is_qprime_side(spec.kind) && (dmask & 1u)) {
        continue;
      }
      std::vector<int> dom;
      for (int x = 0; x < n; ++x) {
        if (dmask & (1u << x)) {
          dom.push_back(x + 1);
        }
      }
      if (spec.kind == FamilyKind::sym_inv) {
        all_injections(n, dom, emit);
      } else {
        std::vector<Pair> pairs;
        isotone_images(dom, pairs, 0, 1, emit);
      }
    }
    std::sort(found.begin(), found.end(), [](Keyed const& a, Keyed const& b) {
      return a.height != b.height ? a.height < b.height : a.text < b.text;
    });
    std::vector<PartialInjection> result;
    result.reserve(found.size());
    for (auto& k : found) {
      result.push_back(k.element);
    }
    return result;
  }

  SemigroupTable SemigroupTable::enumerate(FamilySpec const& spec, int cap) {
    SemigroupTable table;
    table._family = spec;
    table._name   = spec.name();
    auto members  = enumerate_members(spec, cap);
    if (is_rees(spec.kind)) {
      table._sentinel = true;
      table._zero     = 0;
      table._elements.push_back(PartialInjection(spec.n));
      table._labels.emplace_back("0");
    }
    table._elements.reserve(table._elements.size() + members.size());
    for (auto const& alpha : members) {
      auto idx = static_cast<Index>(table._elements.size());
      table._index.emplace(alpha, idx);
      table._labels.push_back(canonical_text(alpha));
      table._elements.push_back(alpha);
    }
    if (!table._sentinel) {
      table._zero = table.index_of(PartialInjection(spec.n));
    }
    table._identity = table.index_of(PartialInjection::identity(spec.n));
    table.build_products();
    return table;
  }

  SemigroupTable SemigroupTable::from_cayley(std::string              name,
                                             std::vector<std::string> labels,
                                             std::vector<Index>       cayley) {
    std::size_t const size = labels.size();
    if (cayley.size() != size * size) {
      throw ValidationError("Cayley table of " + std::to_string(cayley.size())
                            + " entries does not match "
                            + std::to_string(size) + " elements");
    }
    if (std::any_of(cayley.begin(), cayley.end(), [size](Index k) {
          return k >= size;
        })) {
      throw ValidationError("Cayley table entry out of range");
    }
    SemigroupTable table;
    table._name   = std::move(name);
    table._labels = std::move(labels);
    table._cayley = std::move(cayley);
    table.find_identity();
    // A two-sided zero, if any.
    for (Index z = 0; z < size && !table._zero; ++z) {
      bool zero = true;
      for (Index x = 0; x < size && zero; ++x) {
        zero = table.product(z, x) == z && table.product(x, z) == z;
      }
      if (zero) {
        table._zero = z;
      }
    }
    return table;
  }

  void SemigroupTable::build_products() {
    if (size() > kDenseLimit) {
      return;
    }
    std::size_t const n = size();
    _cayley.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        _cayley[i * n + j] = rees_or_plain(i, j);
      }
    }
  }

  void SemigroupTable::find_identity() {
    for (Index e = 0; e < size(); ++e) {
      bool identity = true;
      for (Index x = 0; x < size() && identity; ++x) {
        identity = product(e, x) == x && product(x, e) == x;
      }
      if (identity) {
        _identity = e;
        return;
      }
    }
  }

  Index SemigroupTable::rees_or_plain(std::size_t i, std::size_t j) const {
    if (_sentinel && (i == *_zero || j == *_zero)) {
      return *_zero;
    }
    auto composite = _elements[i] * _elements[j];
    if (_sentinel && composite.height() != *_family->p) {
      return *_zero;
    }
    auto it = _index.find(composite);
    if (it == _index.end()) {
      throw ValidationError("family " + _name + " is not closed: "
                            + _labels[i] + " * " + _labels[j] + " = "
                            + canonical_text(composite));
    }
    return it->second;
  }

  Index SemigroupTable::product(Index i, Index j) const {
    if (!_cayley.empty()) {
      return _cayley[static_cast<std::size_t>(i) * size() + j];
    }
    return rees_or_plain(i, j);
  }

  PartialInjection const& SemigroupTable::element(Index i) const {
    if (_elements.empty()) {
      throw UnsupportedError("table " + _name + " has no element model");
    }
    if (is_zero_sentinel(i)) {
      throw UnsupportedError("the zero sentinel of " + _name
                             + " is not a partial injection");
    }
    return _elements.at(i);
  }

  int SemigroupTable::height(Index i) const {
    if (_elements.empty() || is_zero_sentinel(i)) {
      return -1;
    }
    return _elements.at(i).height();
  }

  std::optional<Index> SemigroupTable::index_of(
      PartialInjection const& alpha) const {
    auto it = _index.find(alpha);
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<Index> SemigroupTable::index_of_text(
      std::string_view text) const {
    if (_sentinel && text == "0") {
      return _zero;
    }
    if (_elements.empty()) {
      auto it = std::find(_labels.begin(), _labels.end(), text);
      if (it == _labels.end()) {
        return std::nullopt;
      }
      return static_cast<Index>(it - _labels.begin());
    }
    try {
      return index_of(parse_text(text));
    } catch (ParseError const&) {
      return std::nullopt;
    }
  }

  std::vector<Index> SemigroupTable::idempotents() const {
    std::vector<Index> result;
    for (Index i = 0; i < size(); ++i) {
      if (is_idempotent(i)) {
        result.push_back(i);
      }
    }
    return result;
  }

  Index rees_product(SemigroupTable const& table, Index i, Index j) {
    if (!table.family() || !is_rees(table.family()->kind)) {
      throw ValidationError("rees_product requires a Rees quotient table, got "
                            + table.name());
    }
    return table.product(i, j);
  }

}  // namespace catalan
