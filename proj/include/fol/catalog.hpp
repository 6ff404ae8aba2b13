#pragma once

#include <string>
#include <vector>

#include "fol/foliation.hpp"

namespace fol {

/// Named example foliations used as fixtures and oracles.  Every entry is
/// integrable; projective entries descend and are saturated.
struct CatalogEntry {
    std::string name;
    FoliationForm form;
    int n = 0;
    int total_degree = 0; // the k of the grading (coefficient degree + 1)
    std::string note;
};

/// d(x_0^2 + ... + x_{n-1}^2): the exact form with a single Morse point.
CatalogEntry morse_model(int n);

/// omega = q g df - p f dg for homogeneous f, g of degrees p, q; has the
/// rational first integral f^q / g^p.
CatalogEntry rational_foliation(const Poly& f, const Poly& g);

/// The standard rational entry in n variables with f = sum x_i^p and
/// g = sum x_i^q (the CLI's rational:p,q[,n]).
CatalogEntry rational_standard(int p, int q, int n = 4);

/// The degree-2 exceptional foliation on the space of binary cubics:
/// omega = i_R i_X i_Y (dz0^dz1^dz2^dz3) with X = sum (3-2i) z_i d/dz_i and
/// Y = sum z_{i+1} d/dz_i.
CatalogEntry exceptional_e3();
VectorField e3_field_X();
VectorField e3_field_Y();

/// Foliations on C^4 annihilated by the Euler field and by
/// v = a x0 d/dx0 + b x1 d/dx1 + c x2 d/dx2 with weight n under v, of
/// coefficient degree d+1: the linear conditions are solved exactly and the
/// integrable members of a deterministic sample are returned.
std::vector<CatalogEntry> tm_family(int a, int b, int c, int n, int d);

/// Quartic binary-form invariants: the generators f0 (degree 2) and g0
/// (degree 3) of the invariant ring are computed as the joint kernel of the
/// three sl2 coefficient fields, and the entry is rational_foliation(f0, g0).
CatalogEntry sl2_quartics();
std::vector<VectorField> sl2_quartic_fields(); // E, F, H on C^5
Poly sl2_invariant_f0();
Poly sl2_invariant_g0();

/// Lookup by CLI name: morse:3, rational:p,q[,n], e3, tm:a,b,c,n,d (returns
/// the whole family), sl2q.
std::vector<CatalogEntry> catalog_lookup(const std::string& name);

} // namespace fol
