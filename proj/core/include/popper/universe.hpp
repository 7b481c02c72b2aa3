#pragma once

#include <boost/dynamic_bitset.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "popper/formula.hpp"

namespace popper {

// A point of the universe: an identifier plus a total truth assignment to the
// model's atoms.
struct World {
  std::string id;
  std::map<std::string, bool> valuation;
};

class Universe;

// An event over a finite universe: a set of worlds, represented as a bitset
// indexed by world position. Props are meaningful only relative to the
// universe they were built from; all set algebra requires equal sizes.
class Prop {
 public:
  Prop() = default;
  explicit Prop(std::size_t universe_size) : bits_(universe_size) {}
  explicit Prop(boost::dynamic_bitset<> bits) : bits_(std::move(bits)) {}

  std::size_t universe_size() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(std::size_t world_index) const { return bits_.test(world_index); }
  bool is_subset_of(const Prop& other) const {
    return bits_.is_subset_of(other.bits_);
  }
  bool intersects(const Prop& other) const { return bits_.intersects(other.bits_); }

  Prop& add(std::size_t world_index) {
    bits_.set(world_index);
    return *this;
  }

  Prop operator&(const Prop& other) const { return Prop(bits_ & other.bits_); }
  Prop operator|(const Prop& other) const { return Prop(bits_ | other.bits_); }
  // Set difference.
  Prop operator-(const Prop& other) const { return Prop(bits_ - other.bits_); }
  // Complement within the universe.
  Prop operator~() const { return Prop(~bits_); }

  bool operator==(const Prop& other) const { return bits_ == other.bits_; }
  bool operator!=(const Prop& other) const { return bits_ != other.bits_; }

  // Index of the first member, or npos when empty.
  std::size_t first() const { return bits_.find_first(); }
  std::size_t next(std::size_t after) const { return bits_.find_next(after); }
  static constexpr std::size_t npos = boost::dynamic_bitset<>::npos;

  // The low-word view, for enumeration loops over small universes.
  unsigned long long mask() const { return bits_.to_ulong(); }

  const boost::dynamic_bitset<>& bits() const { return bits_; }

 private:
  boost::dynamic_bitset<> bits_;
};

// A finite space of named worlds with a shared atom list. Immutable after
// construction; epistemic states hold it by shared_ptr.
class Universe {
 public:
  // Validates: nonempty atom names unique; world ids unique; every valuation
  // total over exactly the declared atoms. Throws ModelError.
  Universe(std::vector<std::string> atoms, std::vector<World> worlds);

  std::size_t size() const { return worlds_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const World& world(std::size_t index) const { return worlds_[index]; }
  const std::vector<World>& worlds() const { return worlds_; }

  bool has_world(const std::string& id) const;
  // Throws ModelError for unknown ids.
  std::size_t index_of(const std::string& id) const;

  Prop empty_prop() const { return Prop(size()); }
  Prop full_prop() const;
  Prop prop_of(const std::vector<std::string>& world_ids) const;
  Prop singleton(std::size_t world_index) const;

  // Renders "{w0, w1}" in world-index order.
  std::string format_prop(const Prop& p) const;

 private:
  std::vector<std::string> atoms_;
  std::vector<World> worlds_;
  std::map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

// Classical truth evaluation of f at w. Throws UnknownAtomError.
bool eval_world(const Formula& f, const World& w);

// { w in universe : eval_world(f, w) }. Throws UnknownAtomError.
Prop extension(const Formula& f, const Universe& universe);

}  // namespace popper
