#include <cstdio>
#include "septensor/criterion.hpp"
using namespace septensor;
int main() {
  const auto W3 = density_from_state(w_state(3));
  const auto rep = evaluate(W3);
  std::printf("W3: S=%.12f sum_s=%.6f sum_add=%.6f\n", rep.S, rep.sum_s, rep.sum_s_add);
  const auto G = density_from_state(ghz_state(3));
  std::printf("GHZ3: S=%.12f\n", evaluate(G).S);
  const auto W4 = density_from_state(w_state(4));
  std::printf("W4: S=%.12f\n", evaluate(W4).S);
  std::printf("tw3: %.9f\n", noise_threshold(W3));
  const auto ens = extract_ensemble(white_noise_mix(G, 0.8), EnsembleLevel::pure);
  std::printf("GHZ3 q=0.8 pure members: %zu\n", ens.members.size());
  return 0;
}
