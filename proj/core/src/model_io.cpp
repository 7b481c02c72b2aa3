#include "popper/model_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "popper/errors.hpp"

namespace popper {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw ModelError("model file line " + std::to_string(line_no) + ": " + what);
}

std::string trimmed(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> fields;
  std::istringstream in(s);
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

// Splits "name=value"; the caller reports errors positionally.
bool split_assignment(const std::string& field, std::string& name,
                      std::string& value) {
  const auto eq = field.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == field.size()) {
    return false;
  }
  name = field.substr(0, eq);
  value = field.substr(eq + 1);
  return true;
}

}  // namespace

EpistemicState parse_model(std::istream& in) {
  std::vector<std::string> atoms;
  bool atoms_seen = false;
  std::vector<World> worlds;
  std::vector<std::map<std::size_t, Rational>> rank_weights;
  std::map<std::string, std::size_t> world_index;
  bool ranks_started = false;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trimmed(raw);
    if (line.empty() || line[0] == '#') continue;

    if (line.rfind("atoms:", 0) == 0) {
      if (atoms_seen) fail(line_no, "duplicate 'atoms:' line");
      atoms = split_fields(line.substr(6));
      if (atoms.empty()) fail(line_no, "'atoms:' declares no atoms");
      atoms_seen = true;
      continue;
    }

    if (line.rfind("world ", 0) == 0) {
      if (!atoms_seen) fail(line_no, "'world' before 'atoms:'");
      if (ranks_started) fail(line_no, "'world' after the first 'rank' line");
      const auto colon = line.find(':');
      if (colon == std::string::npos) fail(line_no, "missing ':' after world id");
      const std::string id = trimmed(line.substr(6, colon - 6));
      if (id.empty()) fail(line_no, "missing world id");
      World w;
      w.id = id;
      for (const auto& field : split_fields(line.substr(colon + 1))) {
        std::string atom, value;
        if (!split_assignment(field, atom, value)) {
          fail(line_no, "expected atom=0 or atom=1, got '" + field + "'");
        }
        if (value != "0" && value != "1") {
          fail(line_no, "atom '" + atom + "' must be 0 or 1, got '" + value + "'");
        }
        if (!w.valuation.emplace(atom, value == "1").second) {
          fail(line_no, "atom '" + atom + "' assigned twice");
        }
      }
      if (!world_index.emplace(id, worlds.size()).second) {
        fail(line_no, "duplicate world id '" + id + "'");
      }
      worlds.push_back(std::move(w));
      continue;
    }

    if (line.rfind("rank ", 0) == 0) {
      if (worlds.empty()) fail(line_no, "'rank' before any 'world' line");
      ranks_started = true;
      const auto colon = line.find(':');
      if (colon == std::string::npos) {
        fail(line_no, "missing ':' after rank index");
      }
      const std::string index_text = trimmed(line.substr(5, colon - 5));
      std::size_t parsed_chars = 0;
      unsigned long index = 0;
      try {
        index = std::stoul(index_text, &parsed_chars);
      } catch (const std::exception&) {
        parsed_chars = 0;
      }
      if (parsed_chars == 0 || parsed_chars != index_text.size()) {
        fail(line_no, "bad rank index '" + index_text + "'");
      }
      if (index != rank_weights.size()) {
        fail(line_no, "rank " + std::to_string(index) + " out of order; expected rank " +
                          std::to_string(rank_weights.size()));
      }
      std::map<std::size_t, Rational> weights;
      for (const auto& field : split_fields(line.substr(colon + 1))) {
        std::string id, value;
        if (!split_assignment(field, id, value)) {
          fail(line_no, "expected world=weight, got '" + field + "'");
        }
        const auto it = world_index.find(id);
        if (it == world_index.end()) {
          fail(line_no, "unknown world '" + id + "'");
        }
        Rational weight;
        try {
          weight = parse_rational(value);
        } catch (const Error& e) {
          fail(line_no, std::string(e.what()));
        }
        if (!weights.emplace(it->second, weight).second) {
          fail(line_no, "world '" + id + "' weighted twice in rank " +
                            std::to_string(index));
        }
      }
      if (weights.empty()) fail(line_no, "rank line assigns no weights");
      rank_weights.push_back(std::move(weights));
      continue;
    }

    fail(line_no, "unrecognized line '" + line + "'");
  }

  if (!atoms_seen) throw ModelError("model file missing 'atoms:' line");
  if (worlds.empty()) throw ModelError("model file declares no worlds");

  auto universe = std::make_shared<const Universe>(std::move(atoms),
                                                   std::move(worlds));
  if (rank_weights.empty()) {
    return EpistemicState::abnormal(std::move(universe));
  }
  std::vector<RankMeasure> ranks;
  ranks.reserve(rank_weights.size());
  for (auto& weights : rank_weights) {
    ranks.emplace_back(std::move(weights));
  }
  return EpistemicState::build(std::move(universe), std::move(ranks));
}

EpistemicState parse_model_text(const std::string& text) {
  std::istringstream in(text);
  return parse_model(in);
}

EpistemicState load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path + "'");
  try {
    return parse_model(in);
  } catch (const ModelError& e) {
    throw ModelError(path + ": " + e.what());
  }
}

std::string serialize_model(const EpistemicState& state) {
  const Universe& u = state.universe();
  std::ostringstream os;
  os << "atoms:";
  for (const auto& atom : u.atoms()) os << " " << atom;
  os << "\n";
  for (const World& w : u.worlds()) {
    os << "world " << w.id << ":";
    for (const auto& atom : u.atoms()) {
      os << " " << atom << "=" << (w.valuation.at(atom) ? 1 : 0);
    }
    os << "\n";
  }
  if (state.is_abnormal()) {
    os << "# abnormal state: no ranks\n";
    return os.str();
  }
  for (std::size_t i = 0; i < state.ranks().size(); ++i) {
    os << "rank " << i << ":";
    for (const auto& [world, weight] : state.ranks()[i].weights()) {
      os << " " << u.world(world).id << "=" << format_rational(weight);
    }
    os << "\n";
  }
  const Prop outside = ~state.total_support();
  if (!outside.empty()) {
    os << "# non-entertainable:";
    for (std::size_t w = outside.first(); w != Prop::npos; w = outside.next(w)) {
      os << " " << u.world(w).id;
    }
    os << "\n";
  }
  return os.str();
}

void save_model(const EpistemicState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ModelError("cannot open '" + path + "' for writing");
  out << serialize_model(state);
  if (!out) throw ModelError("failed writing '" + path + "'");
}

}  // namespace popper
