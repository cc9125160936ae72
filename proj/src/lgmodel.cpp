#include "hhmf/lgmodel.hpp"

#include "hhmf/linalg.hpp"

#include <sstream>

namespace hhmf {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "A") return Family::A;
  if (name == "D") return Family::D;
  if (name == "E6") return Family::E6;
  if (name == "E7") return Family::E7;
  if (name == "E8") return Family::E8;
  throw ModelError("unknown family '" + name + "' (expected A, D, E6, E7 or E8)");
}

IntegerMatrix transpose(const IntegerMatrix& A) { return A.transpose(); }

namespace {

// Block-diagonal [head, 2, 2, ..., 2] of total size n+1.
IntegerMatrix with_quadratic_tail(const IntegerMatrix& head, int n) {
  const Index size = n + 1;
  if (head.rows() > size)
    throw ModelError("dimension n = " + std::to_string(n) + " too small for this type");
  IntegerMatrix A = IntegerMatrix::Zero(size, size);
  A.topLeftCorner(head.rows(), head.cols()) = head;
  for (Index i = head.rows(); i < size; ++i) A(i, i) = 2;
  return A;
}

MonomialPolynomial polynomial_from_matrix(const IntegerMatrix& A) {
  const Index size = A.rows();
  MonomialPolynomial w(static_cast<int>(size) + 1);
  for (Index i = 0; i < size; ++i) {
    Exponents e(size + 1, 0);
    for (Index j = 0; j < size; ++j) e[j + 1] = to_i64(A(i, j));
    w.add_term(1, e);
  }
  return w;
}

IntegerMatrix matrix_2x2(long a, long b, long c, long d) {
  IntegerMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

LGModel LGModel::preset(Family family, int rank, int n) {
  if (n < 1) throw ModelError("n must be at least 1");
  IntegerMatrix poly_head, group_head;
  switch (family) {
    case Family::A:
      if (rank < 1) throw ModelError("A_l needs l >= 1");
      poly_head = group_head = IntegerMatrix::Constant(1, 1, rank + 1);
      break;
    case Family::D:
      if (rank < 4) throw ModelError("D_l needs l >= 4");
      poly_head = IntegerMatrix::Constant(1, 1, 2 * rank - 2);
      group_head = matrix_2x2(rank - 1, 1, 0, 2);
      break;
    case Family::E6:
      if (rank != 6) throw ModelError("E6 has rank 6");
      poly_head = group_head = matrix_2x2(4, 0, 0, 3);
      break;
    case Family::E7:
      if (rank != 7) throw ModelError("E7 has rank 7");
      poly_head = group_head = matrix_2x2(3, 1, 0, 3);
      break;
    case Family::E8:
      if (rank != 8) throw ModelError("E8 has rank 8");
      poly_head = group_head = matrix_2x2(5, 0, 0, 3);
      break;
  }
  const IntegerMatrix poly_matrix = with_quadratic_tail(poly_head, n);
  const IntegerMatrix group_matrix = with_quadratic_tail(group_head, n);
  return build(polynomial_from_matrix(poly_matrix), group_matrix, n, PresetInfo{family, rank});
}

LGModel LGModel::from_exponent_matrix(const IntegerMatrix& A, int n) {
  if (n < 1) throw ModelError("n must be at least 1");
  if (A.rows() != n + 1 || A.cols() != n + 1)
    throw ModelError("exponent matrix must be square of size n+1");
  for (Index i = 0; i < A.rows(); ++i)
    for (Index j = 0; j < A.cols(); ++j)
      if (A(i, j) < 0) throw ModelError("exponent matrix has a negative entry");
  LGModel m = build(polynomial_from_matrix(A), A, n);
  for (int i = 1; i <= n + 1; ++i)
    if (m.q_[i] > Rational(1, 2)) throw ModelError("q-degree of x_" + std::to_string(i) + " exceeds 1/2");
  return m;
}

LGModel LGModel::build(MonomialPolynomial w, const IntegerMatrix& group_matrix, int n,
                       std::optional<PresetInfo> preset) {
  const Index size = n + 1;
  if (group_matrix.rows() != size || group_matrix.cols() != size)
    throw ModelError("group matrix must be square of size n+1");
  if (w.variable_count() != n + 2) throw ModelError("potential must have n+2 variables");
  for (const auto& [e, c] : w.terms())
    if (e[0] != 0) throw ModelError("potential must not involve x_0");

  const RationalMatrix Aq = group_matrix.cast<Rational>();
  if (determinant(Aq) == 0) throw ModelError("exponent matrix is singular");
  const auto q = solve_exact(Aq, RationalVector::Ones(size));

  LGModel m;
  m.n_ = n;
  m.w_ = std::move(w);
  m.group_matrix_ = group_matrix;
  m.preset_ = preset;
  m.q_.assign(n + 2, Rational(0));
  Rational total = 0;
  for (Index i = 0; i < size; ++i) {
    if ((*q)(i) <= 0) throw ModelError("q-degrees must be positive");
    m.q_[i + 1] = (*q)(i);
    total += (*q)(i);
  }
  m.q_[0] = 1 - total;

  // Generators: chi at 0, chi_i at i+1.
  const Index g = n + 3;
  IntegerMatrix R = IntegerMatrix::Zero(size + 1, g);
  for (Index i = 0; i < size; ++i) {
    R(i, 0) = -1;
    for (Index j = 0; j < size; ++j) R(i, j + 2) = group_matrix(i, j);
  }
  R(size, 0) = -1;
  for (Index j = 1; j < g; ++j) R(size, j) = 1;
  m.lattice_ = FgAbelianGroup(g, std::move(R));

  if (!m.lattice_.has_infinite_order(m.chi())) throw ModelError("chi has finite order");
  for (const auto& [e, c] : m.w_.terms())
    if (!m.lattice_.equal(m.degree(e), m.chi()))
      throw ModelError("term " + format_monomial(e) + " does not have degree chi");
  return m;
}

GroupElement LGModel::degree(const Exponents& monomial) const {
  if (static_cast<int>(monomial.size()) != variable_count())
    throw ModelError("monomial has the wrong number of variables");
  IntegerVector v = IntegerVector::Zero(n_ + 3);
  for (int i = 0; i < variable_count(); ++i) v(i + 1) = monomial[i];
  return GroupElement(std::move(v));
}

Rational LGModel::q_degree(const Exponents& monomial) const {
  Rational d = 0;
  for (int i = 0; i < variable_count(); ++i) d += q_[i] * monomial[i];
  return d;
}

Rational LGModel::q_degree(const GroupElement& x) const {
  Rational d = Rational(x.coordinates()(0));
  for (int i = 0; i < variable_count(); ++i) d += q_[i] * Rational(x.coordinates()(i + 1));
  return d;
}

std::string LGModel::name() const {
  std::ostringstream os;
  if (preset_) os << to_string(preset_->family) << (preset_->family == Family::A || preset_->family == Family::D ? "_" + std::to_string(preset_->rank) : "");
  else os << "w = " << format_polynomial(w_);
  os << ", n = " << n_;
  return os.str();
}

std::string Sector::fixed_set_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i = 0; i < fixed.size(); ++i)
    if (fixed[i]) {
      os << (first ? "" : ",") << i;
      first = false;
    }
  os << '}';
  return os.str();
}

std::vector<std::string> Sector::display_tuple() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    const Rational a = angle(static_cast<int>(i));
    if (a == 0) out.emplace_back("1");
    else if (a == Rational(1, 2)) out.emplace_back("-1");
    else out.push_back("exp(2pi*i*" + a.str() + ")");
  }
  return out;
}

std::vector<Sector> sectors(const LGModel& model) {
  const auto chars = enumerate_dual_of_quotient(model.lattice(), model.chi());
  const int vars = model.variable_count();
  std::vector<Sector> out;
  out.reserve(chars.size());
  for (std::size_t k = 0; k < chars.size(); ++k) {
    Sector s;
    s.id = static_cast<Index>(k);
    s.phi = chars[k];
    s.fixed.assign(vars, false);
    s.nu = model.lattice().zero();
    for (int i = 0; i < vars; ++i) {
      s.fixed[i] = s.phi.values[i + 1] == 0;
      if (!s.fixed[i]) {
        ++s.codim;
        s.nu += model.chi_i(i);
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

MonomialPolynomial restrict(const LGModel& model, const Sector& sector) {
  return model.polynomial().restrict_to(sector.fixed);
}

}  // namespace hhmf
