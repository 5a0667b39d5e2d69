#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cthash/analysis.hpp"
#include "cthash/encoding.hpp"
#include "cthash/error.hpp"
#include "cthash/hash.hpp"
#include "cthash/params.hpp"
#include "cthash/reduction.hpp"

namespace py = pybind11;
using namespace cthash;

namespace {

using Nested = std::vector<std::vector<std::vector<Natural>>>;

Tensor3 to_tensor(const Nested& x) {
  const std::size_t n = x.size();
  Tensor3 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].size() != n) throw Error(ErrorKind::Shape, "tensor must be n x n x n");
    for (std::size_t j = 0; j < n; ++j) {
      if (x[i][j].size() != n) throw Error(ErrorKind::Shape, "tensor must be n x n x n");
      for (std::size_t k = 0; k < n; ++k) t(i, j, k) = x[i][j][k];
    }
  }
  return t;
}

Nested from_tensor(const Tensor3& t) {
  const std::size_t n = t.side();
  Nested x(n, std::vector<std::vector<Natural>>(n, std::vector<Natural>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) x[i][j][k] = t(i, j, k);
  return x;
}

std::vector<std::vector<Natural>> from_matrix(const Matrix2& m) {
  std::vector<std::vector<Natural>> out(m.rows(), std::vector<Natural>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

InnerDigest inner_from(const std::string& name) {
  const auto id = parse_inner_digest(name);
  if (!id) throw py::value_error("inner digest must be 'md5' or 'sha256'");
  return *id;
}

Message message_from(const py::bytes& data) { return Message(std::string_view(data)); }

std::vector<std::vector<std::string>> groups_as_bits(const AttackReport& r) {
  std::vector<std::vector<std::string>> out;
  for (const auto& g : r.groups) {
    std::vector<std::string> members;
    for (const auto& a : g) {
      std::string s;
      for (Natural x : a.entries()) s.push_back(x ? '1' : '0');
      members.push_back(std::move(s));
    }
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_cthash, m) {
  m.doc() = "Contingency-table hash core";

  static py::exception<Error> error_type(m, "CtHashError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object kind = py::str(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), py::make_tuple(py::str(e.what()), kind).ptr());
    }
  });

  py::class_<ParameterPair>(m, "ParameterPair")
      .def_static("paper", &paper_pair)
      .def_static("generate", &generate_pair, py::arg("n"), py::arg("seed"),
                  py::arg("retries") = 1000)
      .def_static("validated", [](const Nested& v, const Nested& w) {
        return ParameterPair::validated(to_tensor(v), to_tensor(w));
      })
      .def_static("unchecked", [](const Nested& v, const Nested& w) {
        return ParameterPair::unchecked(to_tensor(v), to_tensor(w));
      })
      .def_static("from_text", [](const std::string& text) {
        std::istringstream in(text);
        return read_params(in);
      })
      .def("to_text", [](const ParameterPair& p) {
        std::ostringstream out;
        write_params(out, p);
        return out.str();
      })
      .def_property_readonly("side", &ParameterPair::side)
      .def_property_readonly("v", [](const ParameterPair& p) { return from_tensor(p.v()); })
      .def_property_readonly("w", [](const ParameterPair& p) { return from_tensor(p.w()); })
      .def_property_readonly("is_validated", &ParameterPair::is_validated)
      .def("__eq__", [](const ParameterPair& a, const ParameterPair& b) { return a == b; });

  m.def(
      "validate",
      [](const Nested& v, const Nested& w) {
        const auto report = validate_pair(to_tensor(v), to_tensor(w));
        py::dict out;
        for (const auto& h : report.hypotheses) {
          out[py::str(h.id)] = py::make_tuple(h.passed, h.passed ? std::string() : h.witness());
        }
        return out;
      },
      "Hypothesis id -> (passed, witness).");

  m.def(
      "hash",
      [](const py::bytes& data, const ParameterPair& params, const std::string& inner,
         unsigned threads) { return h3(message_from(data), params, inner_from(inner), {threads}).hex(); },
      py::arg("data"), py::arg("params"), py::arg("inner") = "sha256", py::arg("threads") = 1);
  m.def(
      "h1",
      [](const py::bytes& data, const ParameterPair& params, unsigned threads) {
        return h1(message_from(data), params, {threads}).to_string();
      },
      py::arg("data"), py::arg("params"), py::arg("threads") = 1);
  m.def("h2", [](const py::bytes& data, const std::string& inner) {
    return h2(std::string_view(data), inner_from(inner)).hex();
  });
  m.def("padded_length", &padded_length, py::arg("bit_length"), py::arg("n"));

  m.def("marginals", [](const Nested& t) {
    const auto mt = marginals3(to_tensor(t));
    return py::make_tuple(from_matrix(mt.rows), from_matrix(mt.columns), from_matrix(mt.files));
  });
  m.def("g1", [](const std::vector<std::vector<Natural>>& a) { return g1(Matrix2::from_rows(a)); });
  m.def("g2", [](const Nested& t) { return g2(to_tensor(t)).to_string(); });
  m.def("g2_fixed", [](const Nested& t, unsigned width) {
    return g2_fixed(to_tensor(t), width).to_string();
  });
  m.def("f0", &f0);

  m.def("duplic", [](const std::string& bits, std::size_t n) {
    return duplic(BitString::parse(bits), n).to_string();
  });
  m.def("build_c", [](const Nested& a) { return from_tensor(build_c(to_tensor(a))); });
  m.def("build_d", [](const Nested& a) { return from_tensor(build_d(to_tensor(a))); });
  m.def("recover", [](const Nested& c) { return from_tensor(recover(to_tensor(c))); });
  m.def(
      "sol3dct",
      [](const std::string& bits, std::size_t n) {
        return from_tensor(sol3dct_demo(BitString::parse(bits), n).table);
      },
      "A 0/1 table of side n whose fixed-width encoding is `bits`.");

  m.def(
      "collision_search",
      [](std::size_t n, const ParameterPair& params, unsigned threads) {
        return groups_as_bits(collision_search_h1(n, params, AttackLimits{2, threads}));
      },
      py::arg("n"), py::arg("params"), py::arg("threads") = 1);
  m.def("preimage_search", [](const std::string& target, std::size_t n, const ParameterPair& params) {
    const auto groups = groups_as_bits(preimage_search(BitString::parse(target), n, params));
    return groups.front();
  });
  m.def("repro_simulation", [] {
    const auto v = repro_simulation();
    py::dict out;
    out["md5_x1"] = v.md5_x1;
    out["md5_x2"] = v.md5_x2;
    out["h3_x1"] = v.h3_x1;
    out["h3_x2"] = v.h3_x2;
    out["differing_bytes"] = v.differing_bytes;
    out["pass"] = v.pass();
    return out;
  });
}
