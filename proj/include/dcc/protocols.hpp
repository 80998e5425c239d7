#pragma once

// Verification diagrams for teleportation, entanglement swapping and
// superdense coding over the qubit Q = p and generators β₁..β₄ (b1..b4).

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcc/interp.hpp"

namespace dcc {

struct Legs {
  Term left;
  Term right;
};

namespace protocol {

/// β_i for i in 1..4.
Term beta(std::size_t i);
Term beta_inv(std::size_t i);
/// γ_i = (β_i)_*
Term gamma(std::size_t i);
/// P_i = (w_p⊗1)∘⌜γ_i⌝∘⌞β_i⌟ : p⊗p* → p⊗p*
Term P(std::size_t i);

Term delta4();  // ⟨1_p, 1_p, 1_p, 1_p⟩
Term Theta();
Term phi();
Term zeta();
Term Omega();
Term Xi();

/// The right leg of the teleportation diagram with the given four
/// correction arrows p → p in place of β_i⁻¹.
Term teleportation_right(const std::vector<Term>& corrections);

}  // namespace protocol

Legs teleportation_legs();
Legs entanglement_swap_legs();
Legs superdense_legs();

struct ProtocolReport {
  std::string name;
  Verdict verdict;
  Legs legs;
  std::chrono::duration<double> elapsed{};

  bool equal() const { return verdict.equal; }
  /// The shared value of both legs when they are equal.
  std::optional<MatArrow> common_value() const;
};

const std::vector<std::string>& protocol_names();
Legs protocol_legs(std::string_view name);
/// Throws std::invalid_argument for an unknown protocol name.
ProtocolReport verify(std::string_view name);

}  // namespace dcc
