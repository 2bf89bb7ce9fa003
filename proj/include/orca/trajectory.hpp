#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "orca/errors.hpp"

namespace orca {

inline constexpr std::uint32_t kAbsentAnswerId = 0xFFFFFFFFu;
inline constexpr std::uint32_t kAbsentTokens = 0u;
inline constexpr std::int8_t kAbsentLabel = -1;

// One problem instance: an ordered sequence of step records. Embeddings are
// dense row-major doubles; correctness bits, answer ids and token counts are
// optional per step and encoded with sentinels (kAbsent*).
struct Trajectory {
  std::uint32_t id = 0;
  int embed_dim = 0;
  std::vector<double> embeddings;       // length() * embed_dim
  std::vector<std::int8_t> correct;     // 0/1, kAbsentLabel = absent
  std::vector<std::uint32_t> answer_ids;
  std::vector<std::uint32_t> tokens;

  int length() const {
    return embed_dim > 0 ? static_cast<int>(embeddings.size()) / embed_dim : 0;
  }

  // 0-based step index.
  std::span<const double> step_embedding(int t) const {
    return {embeddings.data() + static_cast<size_t>(t) * embed_dim,
            static_cast<size_t>(embed_dim)};
  }

  bool has_correct(int t) const {
    return t < static_cast<int>(correct.size()) && correct[t] != kAbsentLabel;
  }
  bool has_answer(int t) const {
    return t < static_cast<int>(answer_ids.size()) && answer_ids[t] != kAbsentAnswerId;
  }
  bool has_tokens(int t) const {
    return t < static_cast<int>(tokens.size()) && tokens[t] != kAbsentTokens;
  }
  bool all_tokens_present() const {
    if (static_cast<int>(tokens.size()) != length()) return false;
    for (int t = 0; t < length(); ++t)
      if (tokens[t] == kAbsentTokens) return false;
    return length() > 0;
  }

  void check_consistent() const {
    const auto len = static_cast<size_t>(length());
    if (embed_dim <= 0) throw input_error("trajectory: embed_dim must be positive");
    if (embeddings.size() != len * static_cast<size_t>(embed_dim))
      throw input_error("trajectory: embedding buffer size mismatch");
    if (!correct.empty() && correct.size() != len)
      throw input_error("trajectory: correctness length mismatch");
    if (!answer_ids.empty() && answer_ids.size() != len)
      throw input_error("trajectory: answer id length mismatch");
    if (!tokens.empty() && tokens.size() != len)
      throw input_error("trajectory: token count length mismatch");
  }
};

}  // namespace orca
