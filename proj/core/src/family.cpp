#include "laminations/family.hpp"

#include <cassert>
#include <utility>

#include "laminations/errors.hpp"

namespace laminations {

namespace {

using Covector = std::vector<Integer>;

Covector unit(int dim, int i) {
  Covector u(dim);
  u[i] = 1;
  return u;
}

Covector add(const Covector& a, const Covector& b) {
  assert(a.size() == b.size());
  Covector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Covector sub(const Covector& a, const Covector& b) {
  assert(a.size() == b.size());
  Covector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Covector scale(const Integer& k, const Covector& a) {
  Covector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

std::vector<Rational> rationalize(const Covector& a) {
  std::vector<Rational> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = Rational(a[i]);
  return r;
}

TwoForm::Term term(const Rational& coeff, const Covector& u, const Covector& v) {
  return TwoForm::Term{coeff, rationalize(u), rationalize(v)};
}

void extend(Covector& v, int by) { v.resize(v.size() + by); }

void extend_model(CoordModel& m, const std::vector<std::string>& names) {
  const int by = static_cast<int>(names.size());
  for (const std::string& name : names) m.coords.push_back(name);
  m.form.dim += by;
  for (TwoForm::Term& t : m.form.terms) {
    t.u.resize(t.u.size() + by);
    t.v.resize(t.v.size() + by);
  }
  for (Congruence& c : m.congruences) extend(c.covector, by);
  if (!m.genus_cov.empty()) extend(m.genus_cov, by);
  if (!m.puncture_cov.empty()) extend(m.puncture_cov, by);
}

const Rational kHalf(Integer(1), Integer(2));

// The nine wedge terms of a genus block over `dim` coordinates, wired to the
// running covector g and the six fresh directions.
std::vector<TwoForm::Term> box_terms(int dim, const Covector& g, int ia, int ib,
                                     int ic, int id, int ie, int if_) {
  const Covector a = unit(dim, ia), b = unit(dim, ib), c = unit(dim, ic),
                 d = unit(dim, id), e = unit(dim, ie), f = unit(dim, if_);
  const Covector ab = add(a, b);        // A + B
  const Covector gab = add(sub(g, a), b);  // G - A + B
  return {
      term(kHalf, a, b),
      term(kHalf, g, a),
      term(kHalf, b, sub(g, a)),
      term(1, ab, c),
      term(1, gab, d),
      term(kHalf, gab, e),
      term(kHalf, e, ab),
      term(kHalf, sub(ab, e), sub(gab, e)),
      term(1, add(g, scale(2, sub(b, e))), f),
  };
}

// Index of a named coordinate; throws when the context lacks it.
int coord_index(const CoordModel& m, const std::string& name) {
  for (size_t i = 0; i < m.coords.size(); ++i)
    if (m.coords[i] == name) return static_cast<int>(i);
  throw Error("model: no coordinate \"" + name + "\"");
}

// Reconstructs the running genus covector G_i and the block coordinate
// indices A_i..F_i inside an already-built context.
struct GenusBlock {
  Covector g;
  std::vector<int> idx;  // A..F, ascending by construction
};

GenusBlock locate_genus_block(const CoordModel& context, int i) {
  if (i < 1) throw Error("model: genus block index must be >= 1");
  const int dim = context.dim();
  GenusBlock blk;
  switch (context.base) {
    case BaseModel::S20:
      blk.g = sub(add(unit(dim, 0), unit(dim, 1)), scale(2, unit(dim, 2)));
      break;
    case BaseModel::S21:
      blk.g = unit(dim, 0);
      blk.g = add(blk.g, unit(dim, 1));
      blk.g = add(blk.g, unit(dim, 2));
      blk.g = add(blk.g, unit(dim, 3));
      blk.g = sub(blk.g, scale(2, unit(dim, 4)));
      break;
    default:
      throw WrongChain("model: no genus blocks on this chain");
  }
  for (int j = 1; j < i; ++j) {
    const int jb = coord_index(context, "B" + std::to_string(j));
    const int je = coord_index(context, "E" + std::to_string(j));
    blk.g = add(blk.g, scale(2, sub(unit(dim, jb), unit(dim, je))));
  }
  for (const char* stem : {"A", "B", "C", "D", "E", "F"})
    blk.idx.push_back(coord_index(context, stem + std::to_string(i)));
  return blk;
}

Integer factorial(int n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

}  // namespace

CoordModel base_model(BaseModel which) {
  CoordModel m;
  m.base = which;
  switch (which) {
    case BaseModel::S05: {
      m.g = 0;
      m.n = 5;
      m.coords = {"z1", "z2", "z3", "z4"};
      m.form.dim = 4;
      const Covector z1 = unit(4, 0), z2 = unit(4, 1), z3 = unit(4, 2),
                     z4 = unit(4, 3);
      m.form.terms = {
          term(2, z1, z2),
          term(2, add(z1, z2), z3),
          term(2, add(add(z1, z2), z3), z4),
      };
      m.puncture_cov = {2, 2, 2, 2};
      break;
    }
    case BaseModel::S12: {
      m.g = 1;
      m.n = 2;
      m.coords = {"s1", "s2", "s3", "s4"};
      m.form.dim = 4;
      const Covector s1 = unit(4, 0), s2 = unit(4, 1), s3 = unit(4, 2),
                     s4 = unit(4, 3);
      const Covector s23 = add(s2, s3);
      const Covector heavy = add(scale(2, s1), s23);  // 2 s1 + s2 + s3
      m.form.terms = {
          term(kHalf, s1, s2),
          term(kHalf, s3, s1),
          term(kHalf, s2, s3),
          term(kHalf, add(s1, s2), add(s1, s3)),
          term(kHalf, s4, s23),
          term(kHalf, heavy, s4),
          term(kHalf, sub(s23, s4), sub(heavy, s4)),
      };
      m.puncture_cov = {2, 2, 2, -2};
      break;
    }
    case BaseModel::S20: {
      m.g = 2;
      m.n = 0;
      m.coords = {"x1", "x2", "x3", "x4", "x5", "x6"};
      m.form.dim = 6;
      const Covector x1 = unit(6, 0), x2 = unit(6, 1), x3 = unit(6, 2),
                     x4 = unit(6, 3), x5 = unit(6, 4), x6 = unit(6, 5);
      m.form.terms = {
          term(1, x1, x2),
          term(1, scale(2, sub(add(x1, x2), x3)), x4),
          term(1, x5, x6),
      };
      m.genus_cov = {1, 1, -2, 0, 0, 0};
      break;
    }
    case BaseModel::S21: {
      m.g = 2;
      m.n = 1;
      m.coords = {"y1", "y2", "y3", "y4", "y5", "y6", "y7", "y8"};
      m.form.dim = 8;
      const Covector y1 = unit(8, 0), y2 = unit(8, 1), y3 = unit(8, 2),
                     y4 = unit(8, 3), y5 = unit(8, 4), y6 = unit(8, 5),
                     y7 = unit(8, 6), y8 = unit(8, 7);
      const Covector y12 = add(y1, y2), y34 = add(y3, y4);
      m.form.terms = {
          term(kHalf, y1, y2),
          term(kHalf, y2, y34),
          term(kHalf, sub(y34, y2), y1),
          term(1, y3, y4),
          term(kHalf, y34, y5),
          term(kHalf, y5, y12),
          term(kHalf, sub(y12, y5), sub(y34, y5)),
          term(1, sub(add(y12, y34), scale(2, y5)), y6),
          term(1, y7, y8),
      };
      m.congruences = {Congruence{{1, -1, 1, 1, 0, 0, 0, 0}, 2}};
      m.genus_cov = {1, 1, 1, 1, -2, 0, 0, 0};
      m.puncture_cov = {1, -1, 1, 1, 0, 0, 0, 0};
      // The residue condition is the initial puncture covector by design.
      assert(m.congruences[0].covector == m.puncture_cov);
      break;
    }
  }
  return m;
}

CoordModel add_genus(const CoordModel& m) {
  if (m.genus_cov.empty() || (m.n != 0 && m.n != 1))
    throw WrongChain("add_genus: model (g=" + std::to_string(m.g) +
                     ", n=" + std::to_string(m.n) + ") is not on a genus chain");
  CoordModel out = m;
  const int i = m.g - 1;
  const std::string tag = std::to_string(i);
  extend_model(out, {"A" + tag, "B" + tag, "C" + tag, "D" + tag, "E" + tag,
                     "F" + tag});
  const int dim = out.dim();
  const int base = dim - 6;
  const Covector g = out.genus_cov;  // already extended with zeros
  std::vector<TwoForm::Term> blk = box_terms(dim, g, base, base + 1, base + 2,
                                             base + 3, base + 4, base + 5);
  for (TwoForm::Term& t : blk) out.form.terms.push_back(std::move(t));
  // G_{i+1} = G_i + 2 B_i - 2 E_i
  out.genus_cov =
      add(g, scale(2, sub(unit(dim, base + 1), unit(dim, base + 4))));
  out.g += 1;
  return out;
}

CoordModel add_puncture(const CoordModel& m) {
  if (m.puncture_cov.empty())
    throw WrongChain("add_puncture: model (g=" + std::to_string(m.g) +
                     ", n=" + std::to_string(m.n) +
                     ") has no puncture chain");
  CoordModel out = m;
  int k = 0;  // index of the appended pair, chain-dependent
  switch (m.base) {
    case BaseModel::S05: k = m.n - 4; break;
    case BaseModel::S12: k = m.n - 1; break;
    case BaseModel::S21: k = m.n; break;
    case BaseModel::S20: assert(false);  // no puncture chain, handled above
  }
  const std::string tag = std::to_string(k);
  extend_model(out, {"a" + tag, "b" + tag});
  const int dim = out.dim();
  const Covector a = unit(dim, dim - 2), b = unit(dim, dim - 1);
  const Covector c = out.puncture_cov;  // already extended with zeros
  out.form.terms.push_back(term(2, a, b));
  out.form.terms.push_back(term(1, c, sub(a, b)));
  // c_{k+1} = c_k - 2 a_k + 2 b_k
  out.puncture_cov = add(c, scale(2, sub(b, a)));
  out.n += 1;
  return out;
}

CoordModel build(int g, int n) {
  const bool supported =
      (g == 0 && n >= 5) || (g == 1 && n >= 2) || (g >= 2 && n >= 0);
  if (!supported)
    throw UnsupportedSurface("build: no model for (g=" + std::to_string(g) +
                             ", n=" + std::to_string(n) + ")");
  CoordModel m;
  if (g == 0) {
    m = base_model(BaseModel::S05);
  } else if (g == 1) {
    m = base_model(BaseModel::S12);
  } else if (n == 0) {
    m = base_model(BaseModel::S20);
  } else {
    m = base_model(BaseModel::S21);
  }
  while (m.g < g) m = add_genus(m);
  while (m.n < n) m = add_puncture(m);
  return m;
}

IntegralLattice model_lattice(const CoordModel& m) {
  IntegralLattice l;
  l.ambient_dim = m.dim();
  if (m.congruences.empty()) {
    l.basis = IntMatrix::identity(m.dim());
    return l;
  }
  // x in Z^dim satisfies cov . x = 0 (mod modulus) iff (x, t) lies in the
  // kernel of [cov | -modulus] for some integer t; project the kernel back.
  const int d = m.dim();
  const int q = static_cast<int>(m.congruences.size());
  IntMatrix sys(q, d + q);
  for (int r = 0; r < q; ++r) {
    assert(static_cast<int>(m.congruences[r].covector.size()) == d);
    for (int j = 0; j < d; ++j) sys.at(r, j) = m.congruences[r].covector[j];
    sys.at(r, d + r) = -m.congruences[r].modulus;
  }
  IntMatrix kernel = integer_kernel(sys);
  IntMatrix projected(d, kernel.cols);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < kernel.cols; ++j) projected.at(i, j) = kernel.at(i, j);
  l.basis = column_hermite(projected);
  return l;
}

TwoForm box_block(const CoordModel& context, int i) {
  const GenusBlock blk = locate_genus_block(context, i);
  TwoForm f;
  f.dim = context.dim();
  f.terms = box_terms(f.dim, blk.g, blk.idx[0], blk.idx[1], blk.idx[2],
                      blk.idx[3], blk.idx[4], blk.idx[5]);
  return f;
}

bool box_cube_identity(const TwoForm& box, const std::vector<int>& block,
                       const std::vector<Rational>& g_cov) {
  assert(block.size() == 6);
  const MultiVector mv = expand(box);
  const MultiVector cube = wedge(wedge(mv, mv), mv);
  const Rational c = cube.coefficient(block);
  if (c != Rational(24) && c != Rational(-24)) return false;
  MultiVector block_part(cube.dim());
  block_part.add_term(block, c);
  return divides_out(cube - block_part, g_cov);
}

bool box_cube_check(int i, const CoordModel& context) {
  const GenusBlock blk = locate_genus_block(context, i);
  return box_cube_identity(box_block(context, i), blk.idx,
                           rationalize(blk.g));
}

bool induction_step_check(const CoordModel& m, StepKind kind) {
  const int post_dim = m.dim() + (kind == StepKind::Genus ? 6 : 2);
  if (post_dim > 14)
    throw OracleTooLarge("induction_step_check: post-step dimension " +
                         std::to_string(post_dim) + " exceeds 14");
  const CoordModel next =
      kind == StepKind::Genus ? add_genus(m) : add_puncture(m);
  const int half_old = m.dim() / 2;
  const int half_new = post_dim / 2;
  const Rational before = top_coefficient(wedge_power(m.form, half_old)) /
                          Rational(factorial(half_old));
  const Rational after = top_coefficient(wedge_power(next.form, half_new)) /
                         Rational(factorial(half_new));
  const Rational factor(kind == StepKind::Genus ? 4 : 2);
  return after == factor * before;
}

}  // namespace laminations
