#include "catalan/pinj.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "catalan/errors.hpp"

namespace catalan {

  namespace {
    void check_degree(int n) {
      if (n < 1 || n > kMaxDegree) {
        throw RangeError("chain size " + std::to_string(n)
                         + " is outside [1, "
                         + std::to_string(kMaxDegree) + "]");
      }
    }

    void check_point(int n, int x) {
      if (x < 1 || x > n) {
        throw RangeError("point " + std::to_string(x) + " is outside [1, "
                         + std::to_string(n) + "]");
      }
    }
  }  // namespace

  PartialInjection::PartialInjection(int n) {
    check_degree(n);
    _n = static_cast<std::uint8_t>(n);
  }

  PartialInjection PartialInjection::identity(int n) {
    PartialInjection result(n);
    for (int x = 0; x < n; ++x) {
      result._img[x] = static_cast<std::uint8_t>(x);
    }
    return result;
  }

  PartialInjection PartialInjection::partial_identity(int n,
                                                      std::span<int const> points) {
    std::vector<Pair> pairs;
    pairs.reserve(points.size());
    for (int x : points) {
      pairs.emplace_back(x, x);
    }
    return from_pairs(n, pairs);
  }

  PartialInjection PartialInjection::from_pairs(int n,
                                                std::span<Pair const> pairs) {
    PartialInjection result(n);
    std::uint32_t    seen_images = 0;
    for (auto const& [x, a] : pairs) {
      check_point(n, x);
      check_point(n, a);
      if (result._img[x - 1] != kUndefined) {
        throw InjectivityError("point " + std::to_string(x)
                               + " is listed twice");
      }
      if (seen_images & (1u << (a - 1))) {
        throw InjectivityError("image " + std::to_string(a)
                               + " is hit twice");
      }
      seen_images |= 1u << (a - 1);
      result._img[x - 1] = static_cast<std::uint8_t>(a - 1);
    }
    return result;
  }

  PartialInjection PartialInjection::from_pairs(int n,
                                                std::initializer_list<Pair> pairs) {
    return from_pairs(n, std::span<Pair const>(pairs.begin(), pairs.size()));
  }

  std::optional<int> PartialInjection::operator()(int x) const {
    if (x < 1 || x > _n || _img[x - 1] == kUndefined) {
      return std::nullopt;
    }
    return _img[x - 1] + 1;
  }

  bool PartialInjection::defined_at(int x) const {
    return x >= 1 && x <= _n && _img[x - 1] != kUndefined;
  }

  int PartialInjection::height() const noexcept {
    return std::popcount(domain_mask());
  }

  std::vector<int> PartialInjection::domain() const {
    std::vector<int> result;
    for (int x = 0; x < _n; ++x) {
      if (_img[x] != kUndefined) {
        result.push_back(x + 1);
      }
    }
    return result;
  }

  std::vector<int> PartialInjection::image() const {
    std::vector<int> result;
    for (int x = 0; x < _n; ++x) {
      if (_img[x] != kUndefined) {
        result.push_back(_img[x] + 1);
      }
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  std::vector<int> PartialInjection::fixed_points() const {
    std::vector<int> result;
    for (int x = 0; x < _n; ++x) {
      if (_img[x] == x) {
        result.push_back(x + 1);
      }
    }
    return result;
  }

  std::vector<PartialInjection::Pair> PartialInjection::pairs() const {
    std::vector<Pair> result;
    for (int x = 0; x < _n; ++x) {
      if (_img[x] != kUndefined) {
        result.emplace_back(x + 1, _img[x] + 1);
      }
    }
    return result;
  }

  int PartialInjection::shift() const noexcept {
    int count = 0;
    for (int x = 0; x < _n; ++x) {
      if (_img[x] != kUndefined && _img[x] != x) {
        ++count;
      }
    }
    return count;
  }

  std::uint32_t PartialInjection::domain_mask() const noexcept {
    std::uint32_t mask = 0;
    for (int x = 0; x < _n; ++x) {
      if (_img[x] != kUndefined) {
        mask |= 1u << x;
      }
    }
    return mask;
  }

  std::uint32_t PartialInjection::image_mask() const noexcept {
    std::uint32_t mask = 0;
    for (int x = 0; x < _n; ++x) {
      if (_img[x] != kUndefined) {
        mask |= 1u << _img[x];
      }
    }
    return mask;
  }

  PartialInjection PartialInjection::inverse() const {
    PartialInjection result(*this);
    result._img.fill(kUndefined);
    for (int x = 0; x < _n; ++x) {
      if (_img[x] != kUndefined) {
        result._img[_img[x]] = static_cast<std::uint8_t>(x);
      }
    }
    return result;
  }

  std::size_t PartialInjection::hash() const noexcept {
    // FNV-1a over the degree and the image table.
    std::size_t h = 14695981039346656037ull;
    auto        mix = [&h](std::uint8_t byte) {
      h ^= byte;
      h *= 1099511628211ull;
    };
    mix(_n);
    for (int x = 0; x < _n; ++x) {
      mix(_img[x]);
    }
    return h;
  }

  PartialInjection compose(PartialInjection const& alpha,
                           PartialInjection const& beta) {
    if (alpha._n != beta._n) {
      throw ChainMismatchError("cannot compose maps of degrees "
                               + std::to_string(alpha._n) + " and "
                               + std::to_string(beta._n));
    }
    PartialInjection result(alpha);
    for (int x = 0; x < alpha._n; ++x) {
      auto y = alpha._img[x];
      result._img[x] = y == PartialInjection::kUndefined
                           ? PartialInjection::kUndefined
                           : beta._img[y];
    }
    return result;
  }

  bool is_isotone(PartialInjection const& alpha) noexcept {
    int last = 0;
    for (int x = 1; x <= alpha.degree(); ++x) {
      if (auto a = alpha(x)) {
        if (*a < last) {
          return false;
        }
        last = *a;
      }
    }
    return true;
  }

  bool is_decreasing(PartialInjection const& alpha) noexcept {
    for (int x = 1; x <= alpha.degree(); ++x) {
      if (auto a = alpha(x); a && *a > x) {
        return false;
      }
    }
    return true;
  }

  bool is_idempotent(PartialInjection const& alpha) {
    return alpha * alpha == alpha;
  }

  bool is_quasi_idempotent(PartialInjection const& alpha) {
    auto sq = alpha * alpha;
    return sq * sq == sq;
  }

  bool is_essential(PartialInjection const& alpha) {
    if (alpha.shift() != 1 || !is_quasi_idempotent(alpha)) {
      return false;
    }
    for (auto [x, a] : alpha.pairs()) {
      if (x != a) {
        return a == x - 1;
      }
    }
    return false;
  }

  std::optional<int> requisite_block_end(PartialInjection const& alpha) {
    if (alpha.defined_at(1) || alpha(2) != 1) {
      return std::nullopt;
    }
    int i = 2;
    while (alpha(i + 1) == i) {
      ++i;
    }
    for (auto [x, a] : alpha.pairs()) {
      if (x <= i) {
        continue;
      }
      if (x != a) {
        return std::nullopt;
      }
    }
    return i;
  }

  std::string_view to_string(ElementKind kind) noexcept {
    switch (kind) {
      case ElementKind::idempotent:
        return "idempotent";
      case ElementKind::essential:
        return "essential";
      case ElementKind::requisite:
        return "requisite";
      case ElementKind::quasi_idempotent_shift_1:
        return "quasi-idempotent-shift-1";
      case ElementKind::other:
        return "other";
    }
    return "other";
  }

  ElementKind classify(PartialInjection const& alpha) {
    if (is_idempotent(alpha)) {
      return ElementKind::idempotent;
    }
    if (is_essential(alpha)) {
      return ElementKind::essential;
    }
    if (is_requisite(alpha)) {
      return ElementKind::requisite;
    }
    if (alpha.shift() == 1 && is_quasi_idempotent(alpha)) {
      return ElementKind::quasi_idempotent_shift_1;
    }
    return ElementKind::other;
  }

  std::string canonical_text(PartialInjection const& alpha) {
    std::string result = std::to_string(alpha.degree()) + ":";
    bool        first  = true;
    for (auto [x, a] : alpha.pairs()) {
      if (!first) {
        result += ',';
      }
      first = false;
      result += std::to_string(x);
      result += '>';
      result += std::to_string(a);
    }
    return result;
  }

  namespace {
    class TextParser {
     public:
      explicit TextParser(std::string_view text) : _text(text) {}

      PartialInjection run() {
        int n = number();
        expect(':');
        if (n < 1 || n > kMaxDegree) {
          throw ParseError("chain size out of range", 0);
        }
        PartialInjection::Pair              p;
        std::vector<PartialInjection::Pair> pairs;
        std::uint32_t                       xs = 0, as = 0;
        while (_pos < _text.size()) {
          if (!pairs.empty()) {
            expect(',');
          }
          std::size_t start = _pos;
          p.first           = number();
          expect('>');
          p.second = number();
          if (p.first < 1 || p.first > n || p.second < 1 || p.second > n) {
            throw ParseError("point out of range", start);
          }
          if (xs & (1u << (p.first - 1))) {
            throw ParseError("duplicate domain point", start);
          }
          if (as & (1u << (p.second - 1))) {
            throw ParseError("duplicate image point", start);
          }
          xs |= 1u << (p.first - 1);
          as |= 1u << (p.second - 1);
          pairs.push_back(p);
        }
        return PartialInjection::from_pairs(n, pairs);
      }

     private:
      int number() {
        int         value = 0;
        auto const* first = _text.data() + _pos;
        auto const* last  = _text.data() + _text.size();
        auto [ptr, ec]    = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr == first) {
          throw ParseError("expected a decimal integer", _pos);
        }
        _pos += static_cast<std::size_t>(ptr - first);
        return value;
      }

      void expect(char c) {
        if (_pos >= _text.size() || _text[_pos] != c) {
          throw ParseError(std::string("expected '") + c + "'", _pos);
        }
        ++_pos;
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };
  }  // namespace

  PartialInjection parse_text(std::string_view text) {
    return TextParser(text).run();
  }

}  // namespace catalan
