#include "popper/examples.hpp"

#include <string>
#include <vector>

#include "popper/errors.hpp"

namespace popper {

EpistemicState kennedy_model() {
  std::vector<World> worlds = {
      {"w0", {{"O", true}, {"S", false}, {"J", true}}},
      {"w1", {{"O", false}, {"S", true}, {"J", true}}},
      {"w2", {{"O", true}, {"S", true}, {"J", true}}},
      {"w3", {{"O", false}, {"S", false}, {"J", false}}},
  };
  auto universe = std::make_shared<const Universe>(
      std::vector<std::string>{"O", "S", "J"}, std::move(worlds));
  std::vector<RankMeasure> ranks;
  ranks.emplace_back(std::map<std::size_t, Rational>{{0, 1}});
  ranks.emplace_back(std::map<std::size_t, Rational>{{1, 1}});
  ranks.emplace_back(std::map<std::size_t, Rational>{{2, 1}});
  return EpistemicState::build(std::move(universe), std::move(ranks));
}

EpistemicState coin_model(unsigned longest_run) {
  std::vector<World> worlds;
  for (unsigned i = 0; i <= longest_run; ++i) {
    worlds.push_back({"n" + std::to_string(i), {{"inf", false}}});
  }
  worlds.push_back({"omega", {{"inf", true}}});
  auto universe = std::make_shared<const Universe>(
      std::vector<std::string>{"inf"}, std::move(worlds));

  // 1/2 + 1/4 + ... + 1/2^(N+1) rescaled by 2^(N+1)/(2^(N+1)-1): the weight
  // of n_i becomes 2^(N-i) over 2^(N+1)-1, and the sum telescopes to 1.
  const Integer denominator = (Integer(1) << (longest_run + 1)) - 1;
  std::map<std::size_t, Rational> finite_weights;
  for (unsigned i = 0; i <= longest_run; ++i) {
    finite_weights[i] = Rational(Integer(1) << (longest_run - i), denominator);
  }
  std::vector<RankMeasure> ranks;
  ranks.emplace_back(std::move(finite_weights));
  ranks.emplace_back(
      std::map<std::size_t, Rational>{{universe->size() - 1, 1}});
  return EpistemicState::build(std::move(universe), std::move(ranks));
}

}  // namespace popper
