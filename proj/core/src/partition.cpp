#include "catalan/partition.hpp"

#include <algorithm>
#include <numeric>

#include "catalan/errors.hpp"

namespace catalan {

  IndexPartition IndexPartition::from_labels(
      std::vector<std::size_t> const& labels) {
    IndexPartition           result;
    std::map<std::size_t, std::size_t> renumber;
    result._class_of.resize(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      auto [it, fresh] = renumber.try_emplace(labels[i], renumber.size());
      if (fresh) {
        result._classes.emplace_back();
      }
      result._class_of[i] = it->second;
      result._classes[it->second].push_back(static_cast<Index>(i));
    }
    return result;
  }

  IndexPartition IndexPartition::discrete(std::size_t size) {
    std::vector<std::size_t> labels(size);
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
  }

  bool IndexPartition::is_discrete() const noexcept {
    return _classes.size() == _class_of.size();
  }

  std::size_t IndexPartition::max_class_size() const noexcept {
    std::size_t result = 0;
    for (auto const& c : _classes) {
      result = std::max(result, c.size());
    }
    return result;
  }

  IndexPartition meet(IndexPartition const& a, IndexPartition const& b) {
    if (a.size() != b.size()) {
      throw ValidationError("meet of partitions of different sizes");
    }
    std::vector<std::pair<std::size_t, std::size_t>> keys(a.size());
    for (Index i = 0; i < a.size(); ++i) {
      keys[i] = {a.class_of(i), b.class_of(i)};
    }
    return IndexPartition::from_keys(keys);
  }

  namespace {
    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          _parent[std::max(a, b)] = std::min(a, b);
        }
      }

     private:
      std::vector<std::size_t> _parent;
    };
  }  // namespace

  IndexPartition join(IndexPartition const& a, IndexPartition const& b) {
    if (a.size() != b.size()) {
      throw ValidationError("join of partitions of different sizes");
    }
    UnionFind uf(a.size());
    for (auto const* p : {&a, &b}) {
      for (auto const& c : p->classes()) {
        for (auto x : c) {
          uf.unite(c.front(), x);
        }
      }
    }
    std::vector<std::size_t> labels(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      labels[i] = uf.find(i);
    }
    return IndexPartition::from_labels(labels);
  }

  BinaryRelation::BinaryRelation(std::size_t size)
      : _rows(size, DynamicBitset(size)) {}

  BinaryRelation BinaryRelation::from_partition(IndexPartition const& p) {
    BinaryRelation result(p.size());
    for (auto const& c : p.classes()) {
      DynamicBitset row(p.size());
      for (auto x : c) {
        row.set(x);
      }
      for (auto x : c) {
        result._rows[x] = row;
      }
    }
    return result;
  }

  std::size_t BinaryRelation::pair_count() const noexcept {
    std::size_t result = 0;
    for (auto const& r : _rows) {
      result += r.count();
    }
    return result;
  }

  BinaryRelation relation_compose(BinaryRelation const& r1,
                                  BinaryRelation const& r2) {
    if (r1.size() != r2.size()) {
      throw ValidationError("cannot compose relations of different sizes");
    }
    BinaryRelation result(r1.size());
    for (Index x = 0; x < r1.size(); ++x) {
      DynamicBitset row(r1.size());
      r1.row(x).for_each([&](std::size_t y) { row |= r2.row(y); });
      row.for_each([&](std::size_t z) { result.insert(x, z); });
    }
    return result;
  }

}  // namespace catalan
