#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hedgesim {

/// Index of a world inside its WorldModel.
using WorldId = std::size_t;

/// A subset of a fixed, finite universe of worlds {0, ..., universe-1}.
///
/// Set operations require both operands to share the same universe size.
class WorldSet {
 public:
  WorldSet() = default;
  explicit WorldSet(std::size_t universe) : bits_(universe, 0) {}
  WorldSet(std::size_t universe, std::initializer_list<WorldId> members);

  static WorldSet full(std::size_t universe);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  bool contains(WorldId w) const noexcept {
    return w < bits_.size() && bits_[w] != 0;
  }
  void insert(WorldId w);
  void erase(WorldId w);

  bool subset_of(const WorldSet& other) const;
  bool intersects(const WorldSet& other) const;

  WorldSet operator&(const WorldSet& other) const;
  WorldSet operator|(const WorldSet& other) const;
  WorldSet operator-(const WorldSet& other) const;
  WorldSet complement() const;

  /// Members in increasing order.
  std::vector<WorldId> members() const;

  friend bool operator==(const WorldSet&, const WorldSet&) = default;

 private:
  void check_same_universe(const WorldSet& other) const;

  std::vector<std::uint8_t> bits_;
};

}  // namespace hedgesim
