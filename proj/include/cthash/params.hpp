#pragma once

// The weight tensors (V, W) used by H1, the hypotheses they must satisfy,
// and their text format.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cthash/tensor.hpp"

namespace cthash {

std::vector<Natural> vones(std::size_t n);
Tensor3 mones(std::size_t n);

// True iff there is no real alpha with u == alpha * v. Decided exactly with
// integer cross products.
bool is_nlc(std::span<const std::int64_t> u, std::span<const std::int64_t> v);
bool is_nlc(std::span<const Natural> u, std::span<const Natural> v);

// The three line directions through a Tensor3. The two fixed indices of a
// line are reported in this order:
//   AlongK: V(i, j, *)   fixed (i, j)
//   AlongI: V(*, j, k)   fixed (j, k)
//   AlongJ: V(i, *, k)   fixed (i, k)
enum class Axis { AlongK, AlongI, AlongJ };
const char* to_string(Axis axis) noexcept;

std::vector<Natural> line(const Tensor3& t, Axis axis, std::size_t a, std::size_t b);

struct HypothesisResult {
  std::string id;           // "4a" .. "4j"
  std::string description;
  bool passed = true;
  // First failing line, 0-based fixed indices. Unset for 4a and on success.
  std::optional<Axis> axis;
  std::size_t first = 0;
  std::size_t second = 0;

  std::string witness() const;  // 1-based, e.g. "V(2,3,*)"
};

struct ValidationReport {
  std::vector<HypothesisResult> hypotheses;  // always ten entries, 4a..4j

  bool valid() const noexcept;
  const HypothesisResult* first_failure() const noexcept;
  const HypothesisResult& operator[](std::string_view id) const;
  std::string to_text() const;
};

// Checks V != W, pairwise non-collinearity of every line of V against the
// matching line of W (three directions), and non-constancy of every line of
// V and of W (three directions each). Shape error on different sides,
// Validation error on a non-positive entry.
ValidationReport validate_pair(const Tensor3& v, const Tensor3& w);

class ParameterPair {
 public:
  // Validates; throws ErrorKind::Validation naming the first failed hypothesis.
  static ParameterPair validated(Tensor3 v, Tensor3 w);
  // Accepts any strictly positive pair of equal side without the hypothesis
  // check (baselines such as V = W = mones(n)). validated() reports false
  // unless the hypotheses happen to hold.
  static ParameterPair unchecked(Tensor3 v, Tensor3 w);

  std::size_t side() const noexcept { return v_.side(); }
  const Tensor3& v() const noexcept { return v_; }
  const Tensor3& w() const noexcept { return w_; }
  bool is_validated() const noexcept { return validated_; }

  friend bool operator==(const ParameterPair&, const ParameterPair&) = default;

 private:
  ParameterPair(Tensor3 v, Tensor3 w, bool ok)
      : v_(std::move(v)), w_(std::move(w)), validated_(ok) {}

  Tensor3 v_;
  Tensor3 w_;
  bool validated_ = false;
};

// V(i,j,k) = i + 8j + 64k, W(i,j,k) = 700 - (j + 8k + 64i) over 1-based
// indices in [1, 8].
ParameterPair paper_pair();

inline constexpr unsigned kDefaultGenerationRetries = 1000;

// Entries uniform in [1, 2 n^2], resampled until the pair validates.
// Deterministic in (n, seed). Generation error when n < 2 or after
// `retries` rejections.
ParameterPair generate_pair(std::size_t n, std::uint64_t seed,
                            unsigned retries = kDefaultGenerationRetries);

// "ct-hash-params v1 n=<n>" followed by V and W in the tensor text format.
// Reading does not validate; callers decide.
ParameterPair read_params(std::istream& in);
void write_params(std::ostream& out, const ParameterPair& params);

}  // namespace cthash
