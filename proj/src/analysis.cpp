#include "cthash/analysis.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string_view>
#include <thread>

#include "cthash/encoding.hpp"
#include "cthash/error.hpp"
#include "cthash/reduction.hpp"

namespace cthash {

const char* to_string(AttackMode mode) noexcept {
  switch (mode) {
    case AttackMode::Preimage: return "preimage";
    case AttackMode::SecondPreimage: return "second-preimage";
    case AttackMode::Collision: return "collision";
  }
  return "?";
}

Tensor3 block_tensor(std::uint64_t index, std::size_t n) {
  const std::size_t volume = n * n * n;
  if (volume > 64) throw Error(ErrorKind::Range, "block index only addresses sides up to 4");
  Tensor3 a(n);
  for (std::size_t t = 0; t < volume; ++t) a.entries()[t] = (index >> (volume - 1 - t)) & 1u;
  return a;
}

std::uint64_t block_index(const Tensor3& a) {
  if (a.volume() > 64 || !a.is_binary()) throw Error(ErrorKind::Range, "not a small 0/1 table");
  std::uint64_t index = 0;
  for (Natural x : a.entries()) index = (index << 1) | x;
  return index;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint64_t space_size(std::size_t n, const AttackLimits& limits) {
  if (n < 1) throw Error(ErrorKind::Range, "side must be positive");
  if (n > limits.max_side) {
    throw Error(ErrorKind::Limit, "exhaustive block search capped at n=" +
                                      std::to_string(limits.max_side) + ", got n=" +
                                      std::to_string(n));
  }
  if (n > 3) throw Error(ErrorKind::Limit, "exhaustive block search supports n <= 3");
  return std::uint64_t{1} << (n * n * n);
}

std::uint64_t fingerprint(const BitString& bits) {
  const auto bytes = bits.packed();
  const std::string_view view(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  return std::hash<std::string_view>{}(view) ^ (bits.size() * 0x9E3779B97F4A7C15ull);
}

// Runs body(first, last) over [0, count) split into contiguous ranges.
void parallel_ranges(std::uint64_t count, unsigned threads,
                     const std::function<void(std::uint64_t, std::uint64_t)>& body) {
  const std::uint64_t parts = std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(count, 1));
  if (parts == 1) {
    body(0, count);
    return;
  }
  std::vector<std::exception_ptr> errors(parts);
  {
    std::vector<std::jthread> workers;
    for (std::uint64_t p = 0; p < parts; ++p) {
      workers.emplace_back([&, p] {
        try {
          body(count * p / parts, count * (p + 1) / parts);
        } catch (...) {
          errors[p] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string block_bits(const Tensor3& a) {
  std::string s;
  for (Natural x : a.entries()) s.push_back(x ? '1' : '0');
  return s;
}

}  // namespace

std::size_t AttackReport::witness_count() const noexcept {
  std::size_t c = 0;
  for (const auto& g : groups) c += g.size();
  return c;
}

std::string AttackReport::to_text() const {
  std::ostringstream os;
  os << to_string(mode) << " search over " << search_space << " blocks of side " << n << '\n';
  if (mode != AttackMode::Collision) {
    os << "target: " << target.to_string() << " (" << target.size() << " bits)\n";
    os << "witnesses: " << witness_count() << '\n';
    for (const auto& g : groups) {
      for (const auto& a : g) os << "  " << block_bits(a) << '\n';
    }
  } else {
    os << "colliding classes: " << groups.size() << ", tables in them: " << witness_count()
       << ", singletons: " << singletons << '\n';
    for (std::size_t g = 0; g < groups.size(); ++g) {
      os << "  class " << g + 1 << ":";
      for (const auto& a : groups[g]) os << ' ' << block_bits(a);
      os << '\n';
    }
  }
  os << "elapsed: " << seconds << " s\n";
  return os.str();
}

std::string AttackReport::to_kv() const {
  std::ostringstream os;
  os << "record=summary mode=" << to_string(mode) << " n=" << n << " space=" << search_space
     << " groups=" << groups.size() << " witnesses=" << witness_count();
  if (mode == AttackMode::Collision) os << " singletons=" << singletons;
  if (mode != AttackMode::Collision) os << " target=" << target.to_string();
  os << " seconds=" << seconds << '\n';
  for (std::size_t g = 0; g < groups.size(); ++g) {
    os << "record=group id=" << g + 1 << " size=" << groups[g].size() << " members=";
    for (std::size_t m = 0; m < groups[g].size(); ++m) {
      os << (m ? "," : "") << block_bits(groups[g][m]);
    }
    os << '\n';
  }
  return os.str();
}

AttackReport collision_search_h1(std::size_t n, const ParameterPair& params,
                                 AttackLimits limits) {
  if (params.side() != n) throw Error(ErrorKind::Shape, "parameter side differs from n");
  const auto start = Clock::now();
  const std::uint64_t space = space_size(n, limits);

  std::vector<std::uint64_t> keys(space);
  parallel_ranges(space, limits.threads, [&](std::uint64_t first, std::uint64_t last) {
    for (std::uint64_t idx = first; idx < last; ++idx) {
      keys[idx] = fingerprint(h1_block(block_tensor(idx, n), params));
    }
  });

  std::vector<std::uint32_t> order(space);
  for (std::uint64_t idx = 0; idx < space; ++idx) order[idx] = static_cast<std::uint32_t>(idx);
  std::sort(order.begin(), order.end(), [&keys](std::uint32_t a, std::uint32_t b) {
    return keys[a] != keys[b] ? keys[a] < keys[b] : a < b;
  });

  AttackReport report;
  report.mode = AttackMode::Collision;
  report.n = n;
  report.search_space = space;
  std::vector<std::vector<std::uint64_t>> classes;
  for (std::size_t lo = 0; lo < order.size();) {
    std::size_t hi = lo + 1;
    while (hi < order.size() && keys[order[hi]] == keys[order[lo]]) ++hi;
    if (hi - lo == 1) {
      ++report.singletons;
    } else {
      // Equal fingerprints: split by exact encoding.
      std::map<BitString, std::vector<std::uint64_t>> exact;
      for (std::size_t p = lo; p < hi; ++p) {
        exact[h1_block(block_tensor(order[p], n), params)].push_back(order[p]);
      }
      for (auto& [code, members] : exact) {
        if (members.size() == 1) {
          ++report.singletons;
        } else {
          classes.push_back(std::move(members));
        }
      }
    }
    lo = hi;
  }
  std::sort(classes.begin(), classes.end());
  for (const auto& members : classes) {
    std::vector<Tensor3> group;
    for (auto idx : members) group.push_back(block_tensor(idx, n));
    report.groups.push_back(std::move(group));
  }
  report.seconds = since(start);
  return report;
}

namespace {

AttackReport scan_for(AttackMode mode, const BitString& y, std::size_t n,
                      const ParameterPair& params, AttackLimits limits,
                      std::optional<std::uint64_t> exclude) {
  if (params.side() != n) throw Error(ErrorKind::Shape, "parameter side differs from n");
  const auto start = Clock::now();
  const std::uint64_t space = space_size(n, limits);
  AttackReport report;
  report.mode = mode;
  report.n = n;
  report.search_space = space;
  report.target = y;
  report.groups.emplace_back();

  // Every block encoding is 3 n^2 (wV + wW) bits with both widths >= 1.
  const std::size_t unit = 3 * n * n;
  if (y.size() % unit == 0 && y.size() >= 2 * unit) {
    const unsigned parts = std::max(1u, limits.threads);
    std::vector<std::vector<std::uint64_t>> found(parts);
    parallel_ranges(parts, parts, [&](std::uint64_t p0, std::uint64_t p1) {
      for (std::uint64_t p = p0; p < p1; ++p) {
        const std::uint64_t first = space * p / parts, last = space * (p + 1) / parts;
        for (std::uint64_t idx = first; idx < last; ++idx) {
          if (exclude && idx == *exclude) continue;
          if (h1_block(block_tensor(idx, n), params) == y) found[p].push_back(idx);
        }
      }
    });
    for (const auto& part : found) {
      for (auto idx : part) report.groups.front().push_back(block_tensor(idx, n));
    }
  }
  report.seconds = since(start);
  return report;
}

}  // namespace

AttackReport preimage_search(const BitString& y, std::size_t n, const ParameterPair& params,
                             AttackLimits limits) {
  return scan_for(AttackMode::Preimage, y, n, params, limits, std::nullopt);
}

AttackReport second_preimage_search(const Tensor3& a, const ParameterPair& params,
                                    AttackLimits limits) {
  if (!a.is_binary()) throw Error(ErrorKind::Range, "blocks are 0/1 tables");
  const BitString y = h1_block(a, params);
  return scan_for(AttackMode::SecondPreimage, y, a.side(), params, limits, block_index(a));
}

std::vector<Tensor3> preimage_fiber_via_3dct(const BitString& y, std::size_t n,
                                             const ParameterPair& params) {
  if (params.side() != n) throw Error(ErrorKind::Shape, "parameter side differs from n");
  const std::size_t unit = 3 * n * n;
  std::set<Tensor3> fiber;
  if (y.size() % unit != 0) return {};
  const std::size_t widths = y.size() / unit;
  for (std::size_t wv = 1; wv < widths; ++wv) {
    const std::size_t ww = widths - wv;
    if (wv > 64 || ww > 64) continue;
    const MarginalTriple mv = decode_marginals(y.slice(0, unit * wv), n, static_cast<unsigned>(wv));
    const MarginalTriple mw =
        decode_marginals(y.slice(unit * wv, unit * ww), n, static_cast<unsigned>(ww));
    // A field width is only consistent with the adaptive encoder if it is
    // exactly the width the decoded marginals call for.
    if (g2_width(mv) != wv || g2_width(mw) != ww) continue;
    for (Tensor3& a : weighted_fiber(mv, params.v(), SolverLimits{n})) {
      if (marginals3(elem_product3(a, params.w())) == mw) fiber.insert(std::move(a));
    }
  }
  return {fiber.begin(), fiber.end()};
}

bool replay(const AttackReport& report, const ParameterPair& params) {
  for (const auto& group : report.groups) {
    std::set<Tensor3> distinct(group.begin(), group.end());
    if (distinct.size() != group.size()) return false;
    if (report.mode == AttackMode::Collision) {
      if (group.size() < 2) return false;
      const BitString first = h1_block(group.front(), params);
      for (const auto& a : group) {
        if (h1_block(a, params) != first) return false;
      }
    } else {
      for (const auto& a : group) {
        if (h1_block(a, params) != report.target) return false;
      }
    }
  }
  return true;
}

// ---- MD5 collision reproduction --------------------------------------------

const std::vector<std::uint8_t>& md5_collision_x1() {
  static const std::vector<std::uint8_t> x = from_hex(
      "d131dd02c5e6eec4693d9a0698aff95c2fcab58712467eab4004583eb8fb7f89"
      "55ad340609f4b30283e488832571415a085125e8f7cdc99fd91dbdf280373c5b"
      "d8823e3156348f5bae6dacd436c919c6dd53e2b487da03fd02396306d248cda0"
      "e99f33420f577ee8ce54b67080a80d1ec69821bcb6a8839396f9652b6ff72a70");
  return x;
}

const std::vector<std::uint8_t>& md5_collision_x2() {
  static const std::vector<std::uint8_t> x = from_hex(
      "d131dd02c5e6eec4693d9a0698aff95c2fcab50712467eab4004583eb8fb7f89"
      "55ad340609f4b30283e4888325f1415a085125e8f7cdc99fd91dbd7280373c5b"
      "d8823e3156348f5bae6dacd436c919c6dd53e23487da03fd02396306d248cda0"
      "e99f33420f577ee8ce54b67080280d1ec69821bcb6a8839396f965ab6ff72a70");
  return x;
}

std::string SimulationVerdict::to_text() const {
  std::ostringstream os;
  os << "MD5(x1) = " << md5_x1 << '\n'
     << "MD5(x2) = " << md5_x2 << '\n'
     << "H3(x1)  = " << h3_x1 << '\n'
     << "H3(x2)  = " << h3_x2 << '\n'
     << "x1 and x2 differ in " << differing_bytes << " bytes\n"
     << "MD5 digests " << (md5_equal ? "equal" : "differ") << ", H3 digests "
     << (h3_differ ? "differ" : "equal") << '\n'
     << "verdict: " << (pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

SimulationVerdict repro_simulation(H1Options options) {
  const auto& x1 = md5_collision_x1();
  const auto& x2 = md5_collision_x2();
  const ParameterPair params = paper_pair();
  SimulationVerdict v;
  v.md5_x1 = h2(x1, InnerDigest::Md5).hex();
  v.md5_x2 = h2(x2, InnerDigest::Md5).hex();
  v.h3_x1 = h3(Message(x1), params, InnerDigest::Md5, options).hex();
  v.h3_x2 = h3(Message(x2), params, InnerDigest::Md5, options).hex();
  for (std::size_t i = 0; i < std::min(x1.size(), x2.size()); ++i) v.differing_bytes += x1[i] != x2[i];
  v.differing_bytes += std::max(x1.size(), x2.size()) - std::min(x1.size(), x2.size());
  v.md5_equal = v.md5_x1 == v.md5_x2;
  v.h3_differ = v.h3_x1 != v.h3_x2;
  return v;
}

// ---- diffusion and throughput ------------------------------------------------

std::string DiffusionStats::to_kv() const {
  std::ostringstream os;
  os << "record=diffusion n=" << n << " trials=" << trials << " message_bytes=" << message_bytes
     << " digest_bits=" << digest_bits << " h1_changed_fraction=" << h1_changed_fraction
     << " mean_distance=" << mean_distance << " stddev_distance=" << stddev_distance
     << " min_distance=" << min_distance << " max_distance=" << max_distance << '\n';
  return os.str();
}

DiffusionStats diffusion_stats(std::size_t n, const ParameterPair& params, std::uint64_t trials,
                               InnerDigest inner, std::uint64_t seed, std::size_t message_bytes) {
  if (trials == 0) throw Error(ErrorKind::Range, "diffusion needs at least one trial");
  if (message_bytes == 0) throw Error(ErrorKind::Range, "diffusion needs a non-empty message");
  if (params.side() != n) throw Error(ErrorKind::Shape, "parameter side differs from n");
  std::mt19937_64 rng(seed);
  DiffusionStats s{n, trials, message_bytes, digest_size(inner) * 8};
  s.min_distance = s.digest_bits;
  std::uint64_t changed = 0;
  double sum = 0, sum_sq = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<std::uint8_t> bytes(message_bytes);
    for (auto& b : bytes) b = static_cast<std::uint8_t>(rng());
    const Message original(bytes);
    BitString flipped_bits = original.bits();
    flipped_bits.flip(rng() % flipped_bits.size());
    const Message flipped(flipped_bits);

    const BitString h1a = h1(original, params);
    const BitString h1b = h1(flipped, params);
    changed += h1a != h1b;
    const Digest da = h2(h1a.packed(), inner);
    const Digest db = h2(h1b.packed(), inner);
    std::size_t d = 0;
    for (std::size_t i = 0; i < da.bytes.size(); ++i) {
      d += static_cast<std::size_t>(std::popcount(static_cast<std::uint8_t>(da.bytes[i] ^ db.bytes[i])));
    }
    sum += static_cast<double>(d);
    sum_sq += static_cast<double>(d) * static_cast<double>(d);
    s.min_distance = std::min(s.min_distance, d);
    s.max_distance = std::max(s.max_distance, d);
  }
  const double count = static_cast<double>(trials);
  s.h1_changed_fraction = static_cast<double>(changed) / count;
  s.mean_distance = sum / count;
  s.stddev_distance = std::sqrt(std::max(0.0, sum_sq / count - s.mean_distance * s.mean_distance));
  return s;
}

std::string Throughput::to_kv() const {
  std::ostringstream os;
  os << "record=bench n=" << n << " bytes=" << bytes << " seconds=" << seconds
     << " mb_per_s=" << mb_per_s << '\n';
  return os.str();
}

Throughput bench_throughput(std::size_t n, const ParameterPair& params, InnerDigest inner,
                            std::size_t payload_size, std::uint64_t seed, H1Options options) {
  if (params.side() != n) throw Error(ErrorKind::Shape, "parameter side differs from n");
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> payload(payload_size);
  for (auto& b : payload) b = static_cast<std::uint8_t>(rng());
  const Message m(std::move(payload));
  const auto start = Clock::now();
  const Digest d = h3(m, params, inner, options);
  Throughput out{n, payload_size, since(start)};
  (void)d;
  out.mb_per_s = out.seconds > 0 ? static_cast<double>(payload_size) / 1e6 / out.seconds : 0.0;
  return out;
}

}  // namespace cthash
