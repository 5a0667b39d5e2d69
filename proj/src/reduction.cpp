#include "cthash/reduction.hpp"

#include <algorithm>

#include "cthash/encoding.hpp"
#include "cthash/error.hpp"

namespace cthash {

DuplicLayout DuplicLayout::for_side(std::size_t n) {
  const unsigned width = f0(n);
  return {n, width, 3 * n * n * width};
}

std::size_t t_offset(std::size_t i, std::size_t n) {
  if (i > 3 * n) {
    throw Error(ErrorKind::Range, "t(i, n) needs 0 <= i <= 3n; got i=" + std::to_string(i) +
                                      ", n=" + std::to_string(n));
  }
  return i * n * f0(n);
}

BitString strcopy(const BitString& x, std::size_t i, std::size_t n) {
  if (i < 1 || i > 3 * n) {
    throw Error(ErrorKind::Range, "group index " + std::to_string(i) + " outside [1, 3n]");
  }
  const std::size_t begin = t_offset(i - 1, n);
  const std::size_t end = t_offset(i, n);
  if (x.size() < end) {
    throw Error(ErrorKind::Range, "bit string of length " + std::to_string(x.size()) +
                                      " has no group " + std::to_string(i));
  }
  return x.slice(begin, end - begin);
}

BitString dcopy(const BitString& x, std::size_t i, std::size_t n) {
  BitString group = strcopy(x, i, n);
  BitString out = group;
  out.append(group);
  return out;
}

BitString duplic(const BitString& x, std::size_t n) {
  const auto layout = DuplicLayout::for_side(n);
  if (x.size() != layout.length) {
    throw Error(ErrorKind::Shape, "duplic expects " + std::to_string(layout.length) +
                                      " bits for n=" + std::to_string(n) + ", got " +
                                      std::to_string(x.size()));
  }
  BitString out;
  out.reserve(4 * x.size());
  for (std::size_t segment = 0; segment < 3; ++segment) {
    BitString line;
    for (std::size_t g = 1; g <= n; ++g) line.append(dcopy(x, segment * n + g, n));
    out.append(line);
    out.append(line);
  }
  return out;
}

namespace {

// Octant placement: each flag says whether that index is shifted by n.
struct Octant {
  bool i, j, k;
};

Tensor3 place(const Tensor3& a, std::initializer_list<Octant> octants) {
  if (!a.is_binary()) throw Error(ErrorKind::Range, "doubling expects a 0/1 table");
  const std::size_t n = a.side();
  Tensor3 out(2 * n);
  for (const Octant o : octants) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          out(i + (o.i ? n : 0), j + (o.j ? n : 0), k + (o.k ? n : 0)) = a(i, j, k);
        }
      }
    }
  }
  return out;
}

}  // namespace

Tensor3 build_c(const Tensor3& a) {
  return place(a, {{false, false, false}, {true, true, false}, {false, true, true}, {true, false, true}});
}

Tensor3 build_d(const Tensor3& a) {
  return place(a, {{false, true, false}, {true, false, false}, {false, false, true}, {true, true, true}});
}

Tensor3 recover(const Tensor3& c, bool require_binary) {
  if (c.side() % 2 != 0) throw Error(ErrorKind::Shape, "recovery needs an even side");
  const std::size_t n = c.side() / 2;
  Tensor3 a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Natural x = checked_add(c(i, j, k), c(i, j + n, k));
        if (require_binary && x > 1) {
          throw Error(ErrorKind::Range, "recovered entry (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + "," + std::to_string(k + 1) +
                                            ") is " + std::to_string(x));
        }
        a(i, j, k) = x;
      }
    }
  }
  return a;
}

// ---- exhaustive 3DCT -------------------------------------------------------

CellDomains binary_domains(std::size_t n) { return CellDomains(n * n * n, {0, 1}); }

CellDomains natural_domains(const MarginalTriple& target) {
  const std::size_t n = target.side();
  CellDomains out(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Natural cap =
            std::min({target.rows(i, k), target.columns(j, k), target.files(i, j)});
        auto& d = out[(i * n + j) * n + k];
        for (Natural v = 0; v <= cap; ++v) d.push_back(v);
      }
    }
  }
  return out;
}

CellDomains weighted_domains(const Tensor3& weights) {
  CellDomains out;
  out.reserve(weights.volume());
  for (Natural w : weights.entries()) {
    if (w == 0) {
      out.push_back({0});
    } else {
      out.push_back({0, w});
    }
  }
  return out;
}

namespace {

class TableSearch {
 public:
  TableSearch(const MarginalTriple& target, const CellDomains& domains,
              const std::function<bool(const Tensor3&)>& visit)
      : n_(target.side()),
        domains_(domains),
        visit_(visit),
        table_(n_),
        need_r_(target.rows.entries().begin(), target.rows.entries().end()),
        need_c_(target.columns.entries().begin(), target.columns.entries().end()),
        need_f_(target.files.entries().begin(), target.files.entries().end()),
        cap_r_(n_ * n_, 0),
        cap_c_(n_ * n_, 0),
        cap_f_(n_ * n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t k = 0; k < n_; ++k) {
          const Natural m = max_of(cell(i, j, k));
          cap_r_[i * n_ + k] += m;
          cap_c_[j * n_ + k] += m;
          cap_f_[i * n_ + j] += m;
        }
      }
    }
  }

  std::size_t run() {
    for (std::size_t l = 0; l < n_ * n_; ++l) {
      if (need_r_[l] > cap_r_[l] || need_c_[l] > cap_c_[l] || need_f_[l] > cap_f_[l]) return 0;
    }
    descend(0);
    return visited_;
  }

 private:
  static Natural max_of(const std::vector<Natural>& d) { return d.empty() ? 0 : d.back(); }

  const std::vector<Natural>& cell(std::size_t i, std::size_t j, std::size_t k) const {
    return domains_[(i * n_ + j) * n_ + k];
  }

  // Returns false once the visitor asked to stop.
  bool descend(std::size_t idx) {
    if (idx == n_ * n_ * n_) {
      ++visited_;
      return visit_(table_);
    }
    const std::size_t i = idx / (n_ * n_);
    const std::size_t j = (idx / n_) % n_;
    const std::size_t k = idx % n_;
    const std::size_t r = i * n_ + k, c = j * n_ + k, f = i * n_ + j;
    const auto& values = domains_[idx];
    const Natural m = max_of(values);
    cap_r_[r] -= m;
    cap_c_[c] -= m;
    cap_f_[f] -= m;
    bool keep_going = true;
    for (Natural v : values) {
      if (v > need_r_[r] || v > need_c_[c] || v > need_f_[f]) break;
      need_r_[r] -= v;
      need_c_[c] -= v;
      need_f_[f] -= v;
      // Remaining cells of each line must still be able to cover the deficit.
      if (need_r_[r] <= cap_r_[r] && need_c_[c] <= cap_c_[c] && need_f_[f] <= cap_f_[f]) {
        table_.entries()[idx] = v;
        keep_going = descend(idx + 1);
      }
      need_r_[r] += v;
      need_c_[c] += v;
      need_f_[f] += v;
      if (!keep_going) break;
    }
    table_.entries()[idx] = 0;
    cap_r_[r] += m;
    cap_c_[c] += m;
    cap_f_[f] += m;
    return keep_going;
  }

  std::size_t n_;
  const CellDomains& domains_;
  const std::function<bool(const Tensor3&)>& visit_;
  Tensor3 table_;
  std::vector<Natural> need_r_, need_c_, need_f_;
  std::vector<Natural> cap_r_, cap_c_, cap_f_;
  std::size_t visited_ = 0;
};

}  // namespace

std::size_t enumerate_tables(const MarginalTriple& target, const CellDomains& domains,
                             const std::function<bool(const Tensor3&)>& visit,
                             SolverLimits limits) {
  const std::size_t n = target.side();
  if (n > limits.max_side) {
    throw Error(ErrorKind::Limit, "exhaustive 3DCT search capped at side " +
                                      std::to_string(limits.max_side) + ", got " +
                                      std::to_string(n));
  }
  if (target.columns.rows() != n || target.files.rows() != n || domains.size() != n * n * n) {
    throw Error(ErrorKind::Shape, "marginals and cell domains disagree on the side");
  }
  for (const auto& d : domains) {
    if (!std::is_sorted(d.begin(), d.end())) {
      throw Error(ErrorKind::Range, "cell domains must be ascending");
    }
  }
  return TableSearch(target, domains, visit).run();
}

std::optional<Tensor3> brute_force_3dct(const MarginalTriple& target, bool binary,
                                        SolverLimits limits) {
  std::optional<Tensor3> found;
  const CellDomains domains = binary ? binary_domains(target.side()) : natural_domains(target);
  enumerate_tables(
      target, domains,
      [&found](const Tensor3& t) {
        found = t;
        return false;
      },
      limits);
  return found;
}

std::vector<Tensor3> weighted_fiber(const MarginalTriple& target, const Tensor3& weights,
                                    SolverLimits limits) {
  if (weights.side() != target.side()) throw Error(ErrorKind::Shape, "weights and marginals disagree on the side");
  std::vector<Tensor3> out;
  enumerate_tables(
      target, weighted_domains(weights),
      [&out](const Tensor3& x) {
        Tensor3 a(x.side());
        for (std::size_t idx = 0; idx < x.volume(); ++idx) a.entries()[idx] = x.entries()[idx] != 0;
        out.push_back(std::move(a));
        return true;
      },
      limits);
  return out;
}

Sol3dctResult sol3dct_demo(const BitString& x, std::size_t n, std::size_t max_side) {
  if (n == 0 || n > max_side) {
    throw Error(ErrorKind::Limit, "reduction demo capped at n=" + std::to_string(max_side) +
                                      ", got n=" + std::to_string(n));
  }
  const auto layout = DuplicLayout::for_side(n);
  const MarginalTriple wanted = decode_marginals(x, n, layout.width);
  const auto total = [](const Matrix2& m) {
    Natural s = 0;
    for (Natural v : m.entries()) s = checked_add(s, v);
    return s;
  };
  if (total(wanted.rows) != total(wanted.columns) || total(wanted.rows) != total(wanted.files)) {
    throw Error(ErrorKind::Infeasible, "row, column and file sums disagree on the table total");
  }

  const BitString z = duplic(x, n);
  const MarginalTriple doubled = decode_marginals(z, 2 * n, layout.width);

  std::optional<Sol3dctResult> result;
  std::size_t examined = 0;
  enumerate_tables(
      doubled, binary_domains(2 * n),
      [&](const Tensor3& c) {
        ++examined;
        Tensor3 a = recover(c, false);
        if (!a.is_binary() || g2_fixed(a, layout.width) != x) return true;
        result = Sol3dctResult{std::move(a), c, examined};
        return false;
      },
      SolverLimits{2 * max_side});
  if (!result) {
    throw Error(ErrorKind::Infeasible, "no 0/1 table of side " + std::to_string(n) +
                                           " has these marginals");
  }
  return *std::move(result);
}

}  // namespace cthash
