#pragma once

#include "heckecount/exactnum/field.hpp"

#include <utility>
#include <vector>

namespace hc::poly {

// Dense univariate polynomial over a FieldCtx, lowest degree first.
using Poly = std::vector<Elem>;

void trim(Poly& f);
int degree(const Poly& f); // -1 for zero

Elem eval(const FieldCtx& F, const Poly& f, Elem x);
Poly derivative(const FieldCtx& F, const Poly& f);
Poly add(const FieldCtx& F, const Poly& f, const Poly& g);
Poly mul(const FieldCtx& F, const Poly& f, const Poly& g);
Poly scale(const FieldCtx& F, const Poly& f, Elem c);
std::pair<Poly, Poly> divmod(const FieldCtx& F, const Poly& f, const Poly& g);
Poly gcd(const FieldCtx& F, Poly f, Poly g); // monic, or zero

// gcd(f, f') == 1; zero and constant f count as not squarefree / squarefree resp.
bool squarefree(const FieldCtx& F, const Poly& f);
bool coprime(const FieldCtx& F, const Poly& f, const Poly& g);

} // namespace hc::poly
