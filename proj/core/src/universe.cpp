#include "popper/universe.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace popper {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Universe::Universe(std::vector<std::string> atoms, std::vector<World> worlds)
    : atoms_(std::move(atoms)), worlds_(std::move(worlds)) {
  std::set<std::string> seen_atoms;
  for (const auto& a : atoms_) {
    if (!valid_identifier(a) || a == "T" || a == "F") {
      throw ModelError("invalid atom name '" + a + "'");
    }
    if (!seen_atoms.insert(a).second) {
      throw ModelError("duplicate atom '" + a + "'");
    }
  }
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    const World& w = worlds_[i];
    if (!valid_identifier(w.id)) {
      throw ModelError("invalid world id '" + w.id + "'");
    }
    if (!index_.emplace(w.id, i).second) {
      throw ModelError("duplicate world id '" + w.id + "'");
    }
    if (w.valuation.size() != atoms_.size()) {
      throw ModelError("world '" + w.id +
                       "' valuation is not total over the declared atoms");
    }
    for (const auto& a : atoms_) {
      if (!w.valuation.count(a)) {
        throw ModelError("world '" + w.id + "' misses atom '" + a + "'");
      }
    }
  }
}

bool Universe::has_world(const std::string& id) const {
  return index_.count(id) != 0;
}

std::size_t Universe::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw ModelError("unknown world '" + id + "'");
  }
  return it->second;
}

Prop Universe::full_prop() const {
  boost::dynamic_bitset<> bits(size());
  bits.set();
  return Prop(std::move(bits));
}

Prop Universe::prop_of(const std::vector<std::string>& world_ids) const {
  Prop p(size());
  for (const auto& id : world_ids) {
    p.add(index_of(id));
  }
  return p;
}

Prop Universe::singleton(std::size_t world_index) const {
  Prop p(size());
  p.add(world_index);
  return p;
}

std::string Universe::format_prop(const Prop& p) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = p.first(); i != Prop::npos; i = p.next(i)) {
    if (!first) out += ", ";
    out += worlds_[i].id;
    first = false;
  }
  return out + "}";
}

bool eval_world(const Formula& f, const World& w) {
  return eval_valuation(f, w.valuation);
}

Prop extension(const Formula& f, const Universe& universe) {
  Prop p(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (eval_world(f, universe.world(i))) {
      p.add(i);
    }
  }
  return p;
}

}  // namespace popper
