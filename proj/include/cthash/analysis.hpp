#pragma once

// Exhaustive attack oracles on single H1 blocks at tiny sides, the
// MD5-collision reproduction, diffusion statistics and throughput timing.

#include <cstdint>
#include <string>
#include <vector>

#include "cthash/bits.hpp"
#include "cthash/digest.hpp"
#include "cthash/hash.hpp"
#include "cthash/params.hpp"
#include "cthash/tensor.hpp"

namespace cthash {

enum class AttackMode { Preimage, SecondPreimage, Collision };
const char* to_string(AttackMode mode) noexcept;

struct AttackLimits {
  std::size_t max_side = 2;  // raise to 3 (2^27 tables) deliberately
  unsigned threads = 1;
};

// The 0/1 table whose VectMat block is `index` written on n^3 bits, MSB
// first, so index order is the lexicographic order of the entries.
Tensor3 block_tensor(std::uint64_t index, std::size_t n);
std::uint64_t block_index(const Tensor3& a);

struct AttackReport {
  AttackMode mode = AttackMode::Collision;
  std::size_t n = 0;
  std::uint64_t search_space = 0;
  BitString target;  // preimage / second-preimage only
  // Collision: every class of >= 2 tables sharing an H1 block encoding.
  // Preimage and second preimage: one group holding every witness (possibly empty).
  std::vector<std::vector<Tensor3>> groups;
  std::uint64_t singletons = 0;  // collision only: tables alone in their class
  double seconds = 0;

  std::size_t witness_count() const noexcept;
  std::string to_text() const;
  // One key=value record per line.
  std::string to_kv() const;
};

AttackReport collision_search_h1(std::size_t n, const ParameterPair& params,
                                 AttackLimits limits = {});
// Every table A with g2(A .* V) || g2(A .* W) == y.
AttackReport preimage_search(const BitString& y, std::size_t n, const ParameterPair& params,
                             AttackLimits limits = {});
// Every table B != a sharing a's block encoding.
AttackReport second_preimage_search(const Tensor3& a, const ParameterPair& params,
                                    AttackLimits limits = {});

// The same fiber as preimage_search, obtained by decoding y into the
// marginals of A .* V and A .* W (trying every split of the two field
// widths) and solving the weighted 3DCT instance by constrained search.
std::vector<Tensor3> preimage_fiber_via_3dct(const BitString& y, std::size_t n,
                                             const ParameterPair& params);

// Re-derives every witness through the hash module.
bool replay(const AttackReport& report, const ParameterPair& params);

// The two 128-byte messages with identical MD5 digests.
const std::vector<std::uint8_t>& md5_collision_x1();
const std::vector<std::uint8_t>& md5_collision_x2();

struct SimulationVerdict {
  std::string md5_x1, md5_x2;
  std::string h3_x1, h3_x2;
  std::size_t differing_bytes = 0;
  bool md5_equal = false;
  bool h3_differ = false;
  bool pass() const noexcept { return md5_equal && h3_differ; }
  std::string to_text() const;
};

// MD5 and H3 (reference n=8 pair, MD5 inside) of both collision messages.
SimulationVerdict repro_simulation(H1Options options = {});

struct DiffusionStats {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::size_t message_bytes = 0;
  std::size_t digest_bits = 0;
  double h1_changed_fraction = 0;
  double mean_distance = 0;
  double stddev_distance = 0;
  std::size_t min_distance = 0;
  std::size_t max_distance = 0;
  std::string to_kv() const;
};

// Random messages, one random message bit flipped per trial (the padding is
// never touched). Range error when trials == 0.
DiffusionStats diffusion_stats(std::size_t n, const ParameterPair& params, std::uint64_t trials,
                               InnerDigest inner, std::uint64_t seed,
                               std::size_t message_bytes = 16);

struct Throughput {
  std::size_t n = 0;
  std::size_t bytes = 0;
  double seconds = 0;
  double mb_per_s = 0;
  std::string to_kv() const;
};

Throughput bench_throughput(std::size_t n, const ParameterPair& params, InnerDigest inner,
                            std::size_t payload_size, std::uint64_t seed = 1,
                            H1Options options = {});

}  // namespace cthash
