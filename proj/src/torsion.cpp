#include "ebelyi/torsion.hpp"

#include <numeric>

#include "ebelyi/error.hpp"
#include "ebelyi/lattice.hpp"
#include "ebelyi/recognize.hpp"

namespace eb {

const std::optional<Num>& TorsionTable::at(long a, long b) const {
  long n = N;
  a = ((a % n) + n) % n;
  b = ((b % n) + n) % n;
  return x[a * n + b];
}

long unit_count(Base b, int N) {
  long count = 0;
  for (long a = 0; a < N; ++a)
    for (long c = 0; c < N; ++c) {
      long norm = b == Base::Qi ? a * a + c * c : a * a + a * c + c * c;
      if (std::gcd(norm, static_cast<long>(N)) == 1) ++count;
    }
  return count;
}

TorsionTable torsion_generator(const Curve& E, int N, mpfr_prec_t prec) {
  if (!(E == Curve::square() || E == Curve::hex()))
    throw Error(ErrorKind::WrongCurve, "torsion generator needs y^2 = x^3 - x or y^2 = x^3 + 1");
  TorsionTable T;
  T.N = N;
  FieldPtr K = Field::base(E.base);
  if (N == 1) {
    T.L = K;
    T.x = {std::nullopt};
    return T;
  }
  bool square = E.base == Base::Qi;
  Poly prim = primitive_division_polynomial(E, N);
  int max_deg = static_cast<int>(std::min<long>(prim.degree(), std::max<long>(1, unit_count(E.base, N) / 2)));

  for (mpfr_prec_t p = prec; p <= 4096; p *= 2) {
    BigComplex j = K->j_value(p + 64);
    ScaledLattice lat = scale_to_model(BigComplex(1L, p + 64), j, square, p + 64);
    BigComplex xP = wp(BigComplex(mpq_class(1, N), 0, p + 64), lat).x;
    auto g = recognize_minpoly(xP, E.base, max_deg, p);
    if (!g) continue;
    std::vector<Num> gc;
    for (const auto& e : *g) gc.push_back(Num::from_k(K, e.a, e.b));
    if (!divides(Poly(gc), prim)) continue;
    T.L = Field::extension(E.base, *g, xP);
    T.theta = T.L->is_base() ? -gc[0] : T.L->t();
    T.D = E.rhs().eval(T.theta);
    Point P = Point::affine(T.theta, Num(1));
    Point jP = j_action(E, P);
    std::vector<Point> row(N), col(N);
    row[0] = col[0] = Point::infinity();
    for (int k = 1; k < N; ++k) {
      row[k] = point_add(E, row[k - 1], P, T.D);
      col[k] = point_add(E, col[k - 1], jP, T.D);
    }
    T.x.assign(static_cast<size_t>(N) * N, std::nullopt);
    int infinities = 0;
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        Point Q = point_add(E, row[a], col[b], T.D);
        if (Q.inf)
          ++infinities;
        else
          T.x[a * N + b] = Q.x;
      }
    if (infinities != 1) throw Error(ErrorKind::InternalInconsistency, "torsion point does not generate E[N]");
    return T;
  }
  throw Error(ErrorKind::PrecisionExhausted, "could not recognize the torsion generator");
}

}  // namespace eb
