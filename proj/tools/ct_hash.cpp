// ct-hash: command-line front end for the contingency-table hash.
//
// Exit codes: 0 success, 1 failed verdict or internal error, 2 usage,
// 3 parameter validation, 4 I/O or malformed input.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cthash/analysis.hpp"
#include "cthash/encoding.hpp"
#include "cthash/error.hpp"
#include "cthash/hash.hpp"
#include "cthash/params.hpp"
#include "cthash/reduction.hpp"

namespace {

using namespace cthash;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitIo = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::uint8_t> read_all(const std::string& path) {
  if (path == "-") {
    std::cin >> std::noskipws;
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  std::vector<std::uint8_t> data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw Error(ErrorKind::Io, "failed reading '" + path + "'");
  return data;
}

std::string read_text(const std::string& path) {
  const auto bytes = read_all(path);
  return {bytes.begin(), bytes.end()};
}

ParameterPair load_params(const std::string& path) {
  std::istringstream in(read_text(path));
  return read_params(in);
}

InnerDigest inner_from(const std::string& name) {
  if (auto id = parse_inner_digest(name)) return *id;
  throw UsageError("unknown inner digest '" + name + "' (expected md5 or sha256)");
}

// Exactly one of: --params FILE, --paper, --generate N (with --seed).
struct ParamsSource {
  std::string file;
  bool paper = false;
  std::size_t generate = 0;
  std::uint64_t seed = 1;

  void add_to(CLI::App* cmd) {
    auto* f = cmd->add_option("--params", file, "Parameter file ('-' for stdin)");
    auto* p = cmd->add_flag("--paper", paper, "Use the built-in n=8 parameter pair");
    auto* g = cmd->add_option("--generate", generate, "Generate a validated pair of this side");
    f->excludes(p)->excludes(g);
    p->excludes(g);
    cmd->add_option("--seed", seed, "Seed for --generate")->capture_default_str();
  }

  ParameterPair resolve() const {
    if (!file.empty()) return load_params(file);
    if (paper) return paper_pair();
    if (generate) return generate_pair(generate, seed);
    throw UsageError("one of --params, --paper or --generate is required");
  }
};

ParameterPair require_valid(const ParameterPair& params) {
  if (!params.is_validated()) {
    // Rebuild through the validating constructor for a diagnostic naming the hypothesis.
    return ParameterPair::validated(params.v(), params.w());
  }
  return params;
}

int run(int argc, char** argv) {
  CLI::App app{"Hash function built on three-dimensional contingency-table marginals"};
  app.require_subcommand(1);
  int exit_code = 0;

  // hash
  auto* hash_cmd = app.add_subcommand("hash", "Hash a file (or stdin) with H3");
  ParamsSource hash_params;
  hash_params.add_to(hash_cmd);
  std::string inner_name = "sha256";
  std::string input = "-";
  std::string format = "hex";
  bool emit_intermediate = false;
  hash_cmd->add_option("--inner", inner_name, "Inner digest: md5 or sha256")->capture_default_str();
  hash_cmd->add_flag("--emit-intermediate", emit_intermediate,
                     "Also print the H1 output as a 0/1 string before the digest");
  hash_cmd->add_option("--format", format, "hex or verbose")
      ->check(CLI::IsMember({"hex", "verbose"}))
      ->capture_default_str();
  hash_cmd->add_option("input", input, "Input file, '-' for stdin")->capture_default_str();
  hash_cmd->callback([&] {
    const ParameterPair params = require_valid(hash_params.resolve());
    const InnerDigest inner = inner_from(inner_name);
    const Message m(read_all(input));
    const H1Options opts{threads_from_env()};
    const BitString intermediate = h1(m, params, opts);
    const Digest d = h2(intermediate.packed(), inner);
    if (emit_intermediate) std::cout << intermediate.to_string() << '\n';
    if (format == "verbose") {
      std::cout << "n=" << params.side() << " inner=" << to_string(inner)
                << " message_bits=" << m.bit_length()
                << " blocks=" << padded_length(m.bit_length(), params.side()) /
                                     (params.side() * params.side() * params.side())
                << " intermediate_bits=" << intermediate.size() << " digest=" << d.hex() << '\n';
    } else {
      std::cout << d.hex() << '\n';
    }
  });

  // validate-params
  auto* validate_cmd = app.add_subcommand("validate-params", "Check a parameter file");
  std::string validate_file;
  validate_cmd->add_option("file", validate_file, "Parameter file, '-' for stdin")->required();
  validate_cmd->callback([&] {
    const ParameterPair params = load_params(validate_file);
    const ValidationReport report = validate_pair(params.v(), params.w());
    std::cout << report.to_text();
    if (!report.valid()) exit_code = kExitValidation;
  });

  // gen-params
  auto* gen_cmd = app.add_subcommand("gen-params", "Generate a validated parameter pair");
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  gen_cmd->add_option("--n", gen_n, "Side length")->required();
  gen_cmd->add_option("--seed", gen_seed, "PRNG seed")->required();
  gen_cmd->callback([&] { write_params(std::cout, generate_pair(gen_n, gen_seed)); });

  // paper-params
  auto* paper_cmd = app.add_subcommand("paper-params", "Print the built-in n=8 parameter pair");
  paper_cmd->callback([&] { write_params(std::cout, paper_pair()); });

  // repro-simulation
  auto* repro_cmd =
      app.add_subcommand("repro-simulation", "Hash the two MD5-colliding messages with H3");
  repro_cmd->callback([&] {
    const SimulationVerdict v = repro_simulation(H1Options{threads_from_env()});
    std::cout << v.to_text();
    if (!v.pass()) exit_code = kExitFailure;
  });

  // reduce
  auto* reduce_cmd =
      app.add_subcommand("reduce", "Recover a 0/1 table from its fixed-width encoding");
  std::size_t reduce_n = 0;
  std::string reduce_input = "-";
  reduce_cmd->add_option("--n", reduce_n, "Side length")->required();
  reduce_cmd->add_option("--input", reduce_input, "0/1 text file, '-' for stdin")->capture_default_str();
  reduce_cmd->callback([&] {
    const BitString x = BitString::parse(read_text(reduce_input));
    const auto layout = DuplicLayout::for_side(reduce_n);
    if (x.size() != layout.length) {
      throw Error(ErrorKind::Format, "expected " + std::to_string(layout.length) +
                                         " bits for n=" + std::to_string(reduce_n) + ", got " +
                                         std::to_string(x.size()));
    }
    try {
      const Sol3dctResult r = sol3dct_demo(x, reduce_n);
      write_tensor(std::cout, r.table);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Infeasible) throw;
      std::cout << "infeasible\n";
    }
  });

  // duplic
  auto* duplic_cmd = app.add_subcommand("duplic", "Filter a 0/1 string through duplic");
  std::size_t duplic_n = 0;
  std::string duplic_input = "-";
  duplic_cmd->add_option("--n", duplic_n, "Side length")->required();
  duplic_cmd->add_option("input", duplic_input, "0/1 text file, '-' for stdin")->capture_default_str();
  duplic_cmd->callback([&] {
    const BitString x = BitString::parse(read_text(duplic_input));
    const auto layout = DuplicLayout::for_side(duplic_n);
    if (x.size() != layout.length) {
      throw Error(ErrorKind::Format, "expected " + std::to_string(layout.length) +
                                         " bits for n=" + std::to_string(duplic_n) + ", got " +
                                         std::to_string(x.size()));
    }
    std::cout << duplic(x, duplic_n).to_string() << '\n';
  });

  // attack
  auto* attack_cmd = app.add_subcommand("attack", "Exhaustive single-block attacks on H1");
  std::string attack_mode;
  std::size_t attack_n = 0;
  std::string attack_params;
  std::string attack_target;
  std::string attack_block;
  std::size_t attack_target_bits = 0;
  bool allow_large = false;
  std::string attack_format = "text";
  attack_cmd->add_option("--mode", attack_mode, "collision, preimage or second-preimage")
      ->required()
      ->check(CLI::IsMember({"collision", "preimage", "second-preimage"}));
  attack_cmd->add_option("--n", attack_n, "Side length")->required();
  attack_cmd->add_option("--params", attack_params, "Parameter file")->required();
  attack_cmd->add_option("--target", attack_target, "Preimage target, packed MSB-first hex");
  attack_cmd->add_option("--target-bits", attack_target_bits,
                         "Target length in bits (default: hex digits * 4 rounded down to 3n^2)");
  attack_cmd->add_option("--block", attack_block, "Second-preimage block as n^3 0/1 characters");
  attack_cmd->add_flag("--allow-large", allow_large, "Permit n=3 (2^27 tables)");
  attack_cmd->add_option("--format", attack_format, "text or kv")
      ->check(CLI::IsMember({"text", "kv"}))
      ->capture_default_str();
  attack_cmd->callback([&] {
    const ParameterPair params = load_params(attack_params);
    if (params.side() != attack_n) {
      throw UsageError("parameter file has n=" + std::to_string(params.side()) + ", --n is " +
                       std::to_string(attack_n));
    }
    if (!params.is_validated()) {
      std::cerr << "warning: parameters do not satisfy the hypotheses\n";
    }
    const AttackLimits limits{allow_large ? std::size_t{3} : std::size_t{2}, threads_from_env()};
    AttackReport report;
    if (attack_mode == "collision") {
      report = collision_search_h1(attack_n, params, limits);
    } else if (attack_mode == "preimage") {
      if (attack_target.empty()) throw UsageError("--target is required for preimage mode");
      const auto bytes = from_hex(attack_target.size() % 2 ? attack_target + "0" : attack_target);
      const std::size_t unit = 3 * attack_n * attack_n;
      std::size_t bits = attack_target_bits;
      if (bits == 0) bits = (attack_target.size() * 4) / unit * unit;
      if (bits > bytes.size() * 8) throw UsageError("--target-bits exceeds the target length");
      report = preimage_search(BitString::from_bytes(bytes, bits), attack_n, params, limits);
    } else {
      if (attack_block.empty()) throw UsageError("--block is required for second-preimage mode");
      const BitString block = BitString::parse(attack_block);
      report = second_preimage_search(vect_mat(block, attack_n), params, limits);
    }
    std::cout << (attack_format == "kv" ? report.to_kv() : report.to_text());
  });

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time H3 over a random payload");
  std::size_t bench_n = 8;
  std::size_t bench_size = 1 << 20;
  std::string bench_inner = "sha256";
  std::string bench_params;
  std::uint64_t bench_seed = 1;
  bench_cmd->add_option("--n", bench_n, "Side length")->capture_default_str();
  bench_cmd->add_option("--size", bench_size, "Payload bytes")->capture_default_str();
  bench_cmd->add_option("--inner", bench_inner, "md5 or sha256")->capture_default_str();
  bench_cmd->add_option("--params", bench_params,
                        "Parameter file (default: built-in pair for n=8, generated otherwise)");
  bench_cmd->add_option("--seed", bench_seed, "Seed for payload and generated parameters")
      ->capture_default_str();
  bench_cmd->callback([&] {
    const ParameterPair params = !bench_params.empty() ? load_params(bench_params)
                                 : bench_n == 8        ? paper_pair()
                                                       : generate_pair(bench_n, bench_seed);
    if (params.side() != bench_n) throw UsageError("parameter side differs from --n");
    std::cout << bench_throughput(bench_n, params, inner_from(bench_inner), bench_size,
                                  bench_seed, H1Options{threads_from_env()})
                     .to_kv();
  });

  // diffusion
  auto* diff_cmd = app.add_subcommand("diffusion", "Single-bit-flip statistics of H1 and H3");
  std::size_t diff_n = 0;
  std::uint64_t diff_trials = 0;
  std::uint64_t diff_seed = 0;
  std::size_t diff_bytes = 16;
  std::string diff_inner = "sha256";
  std::string diff_params;
  bool diff_baseline = false;
  diff_cmd->add_option("--n", diff_n, "Side length")->required();
  diff_cmd->add_option("--trials", diff_trials, "Number of trials")->required();
  diff_cmd->add_option("--seed", diff_seed, "PRNG seed")->required();
  diff_cmd->add_option("--message-bytes", diff_bytes, "Random message length")->capture_default_str();
  diff_cmd->add_option("--inner", diff_inner, "md5 or sha256")->capture_default_str();
  diff_cmd->add_option("--params", diff_params,
                       "Parameter file (default: built-in pair for n=8, generated otherwise)");
  diff_cmd->add_flag("--baseline", diff_baseline, "Also report V = W = all ones");
  diff_cmd->callback([&] {
    const ParameterPair params = !diff_params.empty() ? load_params(diff_params)
                                 : diff_n == 8        ? paper_pair()
                                                      : generate_pair(diff_n, diff_seed);
    if (params.side() != diff_n) throw UsageError("parameter side differs from --n");
    const InnerDigest inner = inner_from(diff_inner);
    std::cout << diffusion_stats(diff_n, params, diff_trials, inner, diff_seed, diff_bytes).to_kv();
    if (diff_baseline) {
      const auto ones = ParameterPair::unchecked(mones(diff_n), mones(diff_n));
      std::string line = diffusion_stats(diff_n, ones, diff_trials, inner, diff_seed, diff_bytes).to_kv();
      line.insert(line.find(' '), " params=ones");
      std::cout << line;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "ct-hash: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cthash::Error& e) {
    std::cerr << "ct-hash: " << e.what() << '\n';
    switch (e.kind()) {
      case cthash::ErrorKind::Validation: return kExitValidation;
      case cthash::ErrorKind::Io:
      case cthash::ErrorKind::Format: return kExitIo;
      case cthash::ErrorKind::Limit:
      case cthash::ErrorKind::Range:
      case cthash::ErrorKind::Shape:
      case cthash::ErrorKind::Generation: return kExitUsage;
      default: return kExitFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "ct-hash: " << e.what() << '\n';
    return kExitFailure;
  }
}
