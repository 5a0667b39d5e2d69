#include "cthash/params.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <random>
#include <regex>
#include <sstream>

#include "cthash/error.hpp"

namespace cthash {

std::vector<Natural> vones(std::size_t n) { return std::vector<Natural>(n, 1); }

Tensor3 mones(std::size_t n) { return Tensor3(n, 1); }

namespace {

__extension__ using Wide = __int128;

template <typename T>
bool nlc_impl(std::span<const T> u, std::span<const T> v) {
  if (u.size() != v.size()) throw Error(ErrorKind::Shape, "NLC test on vectors of different lengths");
  const auto pivot = std::find_if(v.begin(), v.end(), [](T x) { return x != 0; });
  if (pivot == v.end()) {
    // u = alpha * 0 only when u itself is zero.
    return std::any_of(u.begin(), u.end(), [](T x) { return x != 0; });
  }
  const std::size_t p = static_cast<std::size_t>(pivot - v.begin());
  // alpha = u[p] / v[p]; u is collinear iff u[i] * v[p] == u[p] * v[i] for all i.
  for (std::size_t i = 0; i < u.size(); ++i) {
    const Wide lhs = static_cast<Wide>(u[i]) * static_cast<Wide>(v[p]);
    const Wide rhs = static_cast<Wide>(u[p]) * static_cast<Wide>(v[i]);
    if (lhs != rhs) return true;
  }
  return false;
}

}  // namespace

bool is_nlc(std::span<const std::int64_t> u, std::span<const std::int64_t> v) {
  return nlc_impl(u, v);
}

bool is_nlc(std::span<const Natural> u, std::span<const Natural> v) { return nlc_impl(u, v); }

const char* to_string(Axis axis) noexcept {
  switch (axis) {
    case Axis::AlongK: return "(i,j,*)";
    case Axis::AlongI: return "(*,j,k)";
    case Axis::AlongJ: return "(i,*,k)";
  }
  return "?";
}

std::vector<Natural> line(const Tensor3& t, Axis axis, std::size_t a, std::size_t b) {
  const std::size_t n = t.side();
  if (a >= n || b >= n) throw Error(ErrorKind::Range, "line index outside the tensor");
  std::vector<Natural> out(n);
  for (std::size_t s = 0; s < n; ++s) {
    switch (axis) {
      case Axis::AlongK: out[s] = t(a, b, s); break;
      case Axis::AlongI: out[s] = t(s, a, b); break;
      case Axis::AlongJ: out[s] = t(a, s, b); break;
    }
  }
  return out;
}

std::string HypothesisResult::witness() const {
  if (passed || !axis) return {};
  const std::string x = std::to_string(first + 1);
  const std::string y = std::to_string(second + 1);
  // The tensor named in the witness: 4h-4j concern W, everything else V.
  const char* name = (id == "4h" || id == "4i" || id == "4j") ? "W" : "V";
  switch (*axis) {
    case Axis::AlongK: return std::string(name) + "(" + x + "," + y + ",*)";
    case Axis::AlongI: return std::string(name) + "(*," + x + "," + y + ")";
    case Axis::AlongJ: return std::string(name) + "(" + x + ",*," + y + ")";
  }
  return {};
}

bool ValidationReport::valid() const noexcept { return first_failure() == nullptr; }

const HypothesisResult* ValidationReport::first_failure() const noexcept {
  for (const auto& h : hypotheses) {
    if (!h.passed) return &h;
  }
  return nullptr;
}

const HypothesisResult& ValidationReport::operator[](std::string_view id) const {
  for (const auto& h : hypotheses) {
    if (h.id == id) return h;
  }
  throw Error(ErrorKind::Range, "no hypothesis " + std::string(id));
}

std::string ValidationReport::to_text() const {
  std::ostringstream os;
  for (const auto& h : hypotheses) {
    os << '(' << h.id << ") " << (h.passed ? "PASS" : "FAIL") << "  " << h.description;
    if (!h.passed && h.axis) os << "  witness " << h.witness();
    os << '\n';
  }
  os << (valid() ? "valid" : "invalid") << '\n';
  return os.str();
}

namespace {

// Scans every line of `f` in one direction; `against` supplies the vector
// each line must be NLC of.
template <typename Against>
HypothesisResult check_lines(std::string id, std::string description, const Tensor3& f,
                             Axis axis, Against against) {
  HypothesisResult r;
  r.id = std::move(id);
  r.description = std::move(description);
  const std::size_t n = f.side();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const auto lhs = line(f, axis, a, b);
      const auto rhs = against(a, b);
      if (!is_nlc(std::span<const Natural>(lhs), std::span<const Natural>(rhs))) {
        r.passed = false;
        r.axis = axis;
        r.first = a;
        r.second = b;
        return r;
      }
    }
  }
  return r;
}

}  // namespace

ValidationReport validate_pair(const Tensor3& v, const Tensor3& w) {
  if (v.side() != w.side()) throw Error(ErrorKind::Shape, "V and W have different sides");
  if (v.side() == 0) throw Error(ErrorKind::Shape, "empty parameter tensors");
  for (const Tensor3* t : {&v, &w}) {
    const auto e = t->entries();
    if (std::find(e.begin(), e.end(), Natural{0}) != e.end()) {
      throw Error(ErrorKind::Validation,
                  std::string(t == &v ? "V" : "W") + " has an entry equal to 0");
    }
  }

  const std::size_t n = v.side();
  const auto ones = vones(n);
  auto against_w = [&w](Axis axis) {
    return [&w, axis](std::size_t a, std::size_t b) { return line(w, axis, a, b); };
  };
  auto against_ones = [&ones](std::size_t, std::size_t) { return ones; };

  ValidationReport report;
  HypothesisResult distinct;
  distinct.id = "4a";
  distinct.description = "V != W";
  distinct.passed = v != w;
  report.hypotheses.push_back(distinct);
  report.hypotheses.push_back(check_lines("4b", "V(i,j,*) NLC of W(i,j,*)", v, Axis::AlongK, against_w(Axis::AlongK)));
  report.hypotheses.push_back(check_lines("4c", "V(*,j,k) NLC of W(*,j,k)", v, Axis::AlongI, against_w(Axis::AlongI)));
  report.hypotheses.push_back(check_lines("4d", "V(i,*,k) NLC of W(i,*,k)", v, Axis::AlongJ, against_w(Axis::AlongJ)));
  report.hypotheses.push_back(check_lines("4e", "V(i,j,*) NLC of VOnes", v, Axis::AlongK, against_ones));
  report.hypotheses.push_back(check_lines("4f", "V(*,j,k) NLC of VOnes", v, Axis::AlongI, against_ones));
  report.hypotheses.push_back(check_lines("4g", "V(i,*,k) NLC of VOnes", v, Axis::AlongJ, against_ones));
  report.hypotheses.push_back(check_lines("4h", "W(i,j,*) NLC of VOnes", w, Axis::AlongK, against_ones));
  report.hypotheses.push_back(check_lines("4i", "W(*,j,k) NLC of VOnes", w, Axis::AlongI, against_ones));
  report.hypotheses.push_back(check_lines("4j", "W(i,*,k) NLC of VOnes", w, Axis::AlongJ, against_ones));
  return report;
}

ParameterPair ParameterPair::validated(Tensor3 v, Tensor3 w) {
  const auto report = validate_pair(v, w);
  if (const auto* bad = report.first_failure()) {
    std::string msg = "parameters fail hypothesis (" + bad->id + ") " + bad->description;
    if (bad->axis) msg += " at " + bad->witness();
    throw Error(ErrorKind::Validation, msg);
  }
  return ParameterPair(std::move(v), std::move(w), true);
}

ParameterPair ParameterPair::unchecked(Tensor3 v, Tensor3 w) {
  const bool ok = validate_pair(v, w).valid();
  return ParameterPair(std::move(v), std::move(w), ok);
}

ParameterPair paper_pair() {
  constexpr std::size_t n = 8;
  Tensor3 v(n), w(n);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t k = 1; k <= n; ++k) {
        v(i - 1, j - 1, k - 1) = i + 8 * j + 64 * k;
        w(i - 1, j - 1, k - 1) = 700 - (j + 8 * k + 64 * i);
      }
    }
  }
  return ParameterPair::validated(std::move(v), std::move(w));
}

ParameterPair generate_pair(std::size_t n, std::uint64_t seed, unsigned retries) {
  if (n < 2) {
    throw Error(ErrorKind::Generation,
                "no positive pair of side " + std::to_string(n) +
                    " can satisfy the hypotheses: every length-1 line is a multiple of VOnes(1)");
  }
  std::mt19937_64 rng(seed);
  // Plain modulo keeps the stream identical across standard libraries.
  const Natural range = 2 * static_cast<Natural>(n) * n;
  auto draw = [&] {
    Tensor3 t(n);
    for (auto& x : t.entries()) x = 1 + rng() % range;
    return t;
  };
  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    Tensor3 v = draw();
    Tensor3 w = draw();
    if (validate_pair(v, w).valid()) return ParameterPair::validated(std::move(v), std::move(w));
  }
  throw Error(ErrorKind::Generation, "no valid pair of side " + std::to_string(n) + " after " +
                                         std::to_string(retries) + " attempts");
}

ParameterPair read_params(std::istream& in) {
  std::string header;
  while (header.empty() && std::getline(in, header)) {
    header.erase(0, header.find_first_not_of(" \t\r"));
    while (!header.empty() && std::isspace(static_cast<unsigned char>(header.back()))) header.pop_back();
  }
  static const std::regex kHeader(R"(ct-hash-params v1 n=(\d+))");
  std::smatch m;
  if (!std::regex_match(header, m, kHeader)) {
    throw Error(ErrorKind::Format, "missing 'ct-hash-params v1 n=<n>' header");
  }
  const auto n = std::stoull(m[1].str());
  Tensor3 v = read_tensor(in);
  Tensor3 w = read_tensor(in);
  if (v.side() != n || w.side() != n) {
    throw Error(ErrorKind::Format, "header declares n=" + std::to_string(n) +
                                       " but tensors have sides " + std::to_string(v.side()) +
                                       " and " + std::to_string(w.side()));
  }
  std::string trailing;
  if (in >> trailing) throw Error(ErrorKind::Format, "unexpected trailing data '" + trailing + "'");
  return ParameterPair::unchecked(std::move(v), std::move(w));
}

void write_params(std::ostream& out, const ParameterPair& params) {
  out << "ct-hash-params v1 n=" << params.side() << '\n';
  write_tensor(out, params.v());
  write_tensor(out, params.w());
}

}  // namespace cthash
