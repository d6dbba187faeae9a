#ifndef RECRUIT_RNG_HPP
#define RECRUIT_RNG_HPP

#include <cstdint>

namespace recruit {

/// Identifies one reproducible random stream. Equal (seed, stream_id) pairs
/// always yield identical sample sequences, independent of thread scheduling.
struct RngHandle {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  /// Derive a child stream keyed by up to two tags (e.g. replication index,
  /// centre index). Derivation is a pure hash of (stream_id, a, b).
  RngHandle substream(std::uint64_t a, std::uint64_t b = 0) const;
};

/// xoshiro256++ engine, state expanded from the handle via splitmix64.
class Rng {
 public:
  explicit Rng(RngHandle h);
  Rng(std::uint64_t seed, std::uint64_t stream_id)
      : Rng(RngHandle{seed, stream_id}) {}

  std::uint64_t next_u64();

  /// Uniform on [0, 1).
  double uniform01();
  /// Uniform on (0, 1); safe as a log() argument.
  double uniform_pos();
  /// Standard normal (Marsaglia polar, one spare cached).
  double normal();

  RngHandle handle() const { return handle_; }

 private:
  std::uint64_t s_[4];
  RngHandle handle_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace recruit

#endif
