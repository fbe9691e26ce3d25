#ifndef CATALAN_PARTITION_HPP_
#define CATALAN_PARTITION_HPP_

#include <cstddef>
#include <map>
#include <vector>

#include "catalan/bitset.hpp"
#include "catalan/families.hpp"

namespace catalan {

  //! An equivalence relation on the indices {0, ..., size - 1}.
  //!
  //! Class ids are assigned in order of least member, so two partitions of
  //! the same relation compare equal.
  class IndexPartition {
   public:
    IndexPartition() = default;

    //! Groups indices with equal keys; Key needs operator<.
    template <typename Key>
    static IndexPartition from_keys(std::vector<Key> const& keys) {
      std::map<Key, std::size_t> ids;
      std::vector<std::size_t>   raw(keys.size());
      for (std::size_t i = 0; i < keys.size(); ++i) {
        raw[i] = ids.try_emplace(keys[i], ids.size()).first->second;
      }
      return from_labels(raw);
    }

    // Arbitrary labels; renumbered by least member.
    static IndexPartition from_labels(std::vector<std::size_t> const& labels);
    static IndexPartition discrete(std::size_t size);

    std::size_t size() const noexcept {
      return _class_of.size();
    }
    std::size_t class_count() const noexcept {
      return _classes.size();
    }
    std::size_t class_of(Index i) const {
      return _class_of.at(i);
    }
    std::vector<std::vector<Index>> const& classes() const noexcept {
      return _classes;
    }
    std::vector<Index> const& class_containing(Index i) const {
      return _classes[class_of(i)];
    }
    bool same_class(Index a, Index b) const {
      return class_of(a) == class_of(b);
    }
    bool        is_discrete() const noexcept;
    std::size_t max_class_size() const noexcept;

    bool operator==(IndexPartition const& other) const {
      return _class_of == other._class_of;
    }

   private:
    std::vector<std::size_t>        _class_of;
    std::vector<std::vector<Index>> _classes;
  };

  IndexPartition meet(IndexPartition const& a, IndexPartition const& b);
  // Finest equivalence containing both (transitive closure of the union).
  IndexPartition join(IndexPartition const& a, IndexPartition const& b);

  //! A binary relation on {0, ..., size - 1} stored as a bit matrix.
  //!
  //! Used where a relation need not be an equivalence, e.g. the composite
  //! of two equivalences.
  class BinaryRelation {
   public:
    BinaryRelation() = default;
    explicit BinaryRelation(std::size_t size);

    static BinaryRelation from_partition(IndexPartition const& p);

    std::size_t size() const noexcept {
      return _rows.size();
    }
    bool contains(Index a, Index b) const {
      return _rows.at(a).test(b);
    }
    void insert(Index a, Index b) {
      _rows.at(a).set(b);
    }
    DynamicBitset const& row(Index a) const {
      return _rows.at(a);
    }
    std::size_t pair_count() const noexcept;

    bool operator==(BinaryRelation const&) const = default;

   private:
    std::vector<DynamicBitset> _rows;
  };

  //! (x, z) is in the result iff some y has (x, y) in r1 and (y, z) in r2.
  //! Throws ValidationError if the sizes differ.
  BinaryRelation relation_compose(BinaryRelation const& r1,
                                  BinaryRelation const& r2);

  inline bool relations_equal(BinaryRelation const& a,
                              BinaryRelation const& b) {
    return a == b;
  }

}  // namespace catalan

#endif  // CATALAN_PARTITION_HPP_
