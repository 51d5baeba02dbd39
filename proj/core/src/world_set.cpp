#include "hedgesim/world_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace hedgesim {

WorldSet::WorldSet(std::size_t universe, std::initializer_list<WorldId> members)
    : bits_(universe, 0) {
  for (WorldId w : members) insert(w);
}

WorldSet WorldSet::full(std::size_t universe) {
  WorldSet s(universe);
  std::fill(s.bits_.begin(), s.bits_.end(), std::uint8_t{1});
  return s;
}

std::size_t WorldSet::size() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

void WorldSet::insert(WorldId w) {
  if (w >= bits_.size()) throw std::out_of_range("world index outside universe");
  bits_[w] = 1;
}

void WorldSet::erase(WorldId w) {
  if (w < bits_.size()) bits_[w] = 0;
}

void WorldSet::check_same_universe(const WorldSet& other) const {
  if (other.bits_.size() != bits_.size())
    throw std::invalid_argument("world sets over different universes");
}

bool WorldSet::subset_of(const WorldSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

bool WorldSet::intersects(const WorldSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && other.bits_[i]) return true;
  return false;
}

WorldSet WorldSet::operator&(const WorldSet& other) const {
  check_same_universe(other);
  WorldSet r(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] & other.bits_[i];
  return r;
}

WorldSet WorldSet::operator|(const WorldSet& other) const {
  check_same_universe(other);
  WorldSet r(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = bits_[i] | other.bits_[i];
  return r;
}

WorldSet WorldSet::operator-(const WorldSet& other) const {
  check_same_universe(other);
  WorldSet r(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i)
    r.bits_[i] = bits_[i] && !other.bits_[i] ? 1 : 0;
  return r;
}

WorldSet WorldSet::complement() const {
  return full(bits_.size()) - *this;
}

std::vector<WorldId> WorldSet::members() const {
  std::vector<WorldId> out;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

}  // namespace hedgesim
