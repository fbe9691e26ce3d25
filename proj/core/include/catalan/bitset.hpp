#ifndef CATALAN_BITSET_HPP_
#define CATALAN_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace catalan {

  // Fixed-size bitset whose size is chosen at run time.
  class DynamicBitset {
   public:
    DynamicBitset() = default;
    explicit DynamicBitset(std::size_t size)
        : _size(size), _words((size + 63) / 64, 0) {}

    std::size_t size() const noexcept {
      return _size;
    }

    bool test(std::size_t i) const noexcept {
      return (_words[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i) noexcept {
      _words[i >> 6] |= std::uint64_t(1) << (i & 63);
    }

    void reset(std::size_t i) noexcept {
      _words[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : _words) {
        c += static_cast<std::size_t>(std::popcount(w));
      }
      return c;
    }

    bool none() const noexcept {
      for (auto w : _words) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    DynamicBitset& operator|=(DynamicBitset const& other) noexcept {
      for (std::size_t k = 0; k < _words.size(); ++k) {
        _words[k] |= other._words[k];
      }
      return *this;
    }

    DynamicBitset& operator&=(DynamicBitset const& other) noexcept {
      for (std::size_t k = 0; k < _words.size(); ++k) {
        _words[k] &= other._words[k];
      }
      return *this;
    }

    // Every bit of this is also set in other.
    bool is_subset_of(DynamicBitset const& other) const noexcept {
      for (std::size_t k = 0; k < _words.size(); ++k) {
        if (_words[k] & ~other._words[k]) {
          return false;
        }
      }
      return true;
    }

    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t k = 0; k < _words.size(); ++k) {
        std::uint64_t w = _words[k];
        while (w != 0) {
          f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
          w &= w - 1;
        }
      }
    }

    bool operator==(DynamicBitset const&) const = default;
    auto operator<=>(DynamicBitset const&) const = default;

   private:
    std::size_t                _size = 0;
    std::vector<std::uint64_t> _words;
  };

}  // namespace catalan

#endif  // CATALAN_BITSET_HPP_
