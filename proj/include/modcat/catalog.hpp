#pragma once

#include <map>
#include <optional>

#include "modcat/hopf.hpp"

namespace modcat {

/// A fully validated example: Hopf data, named R-matrices and cocycles,
/// internal algebras, and the expected verdict table replayed by the suites.
struct CatalogEntry {
    std::string name;
    HopfPtr hopf;
    std::map<std::string, HopfPtr> hopfs;  // auxiliary Hopf algebras, if any
    std::map<std::string, TensorElt> rmatrices;
    std::map<std::string, TensorElt> cocycles;
    std::map<std::string, ModuleAlgebra> moduleAlgebras;

    struct Expected {
        std::string predicate;
        std::string subject;
        bool verdict;
        std::string note;
    };
    std::vector<Expected> expected;
    std::map<std::string, std::string> metadata;
};

/// The four-dimensional Hopf algebra <x, g | x^2 = 0, g^2 = 1, gx = -xg> over
/// Q with its symmetric R-matrix family and the internal algebras I and B*.
CatalogEntry sweedler();

/// R_t = 1/2 (1(x)1 + g(x)1 + 1(x)g - g(x)g)(1(x)1 + t x (x) gx).
TensorElt sweedler_r(const HopfPtr& s, const mpq_class& t);

/// The small quantum group of sl2 at a primitive p-th root of unity, p odd
/// and >= 3, over Q(zeta_p), in the PBW basis F^m E^n K^j, with the standard
/// factorizable R-matrix (normalization pinned by the R-matrix checker).
/// Errors InvalidOrder for bad p.
CatalogEntry uq_sl2(long p);

/// PBW basis index of F^m E^n K^j.
int uq_index(long p, int m, int n, int j);

/// The dual group algebra k^{C_n} (entry Hopf algebra) together with the
/// group algebra kC_n, both with R = 1 (x) 1, over F_charP or Q.
CatalogEntry group_family(long n, std::optional<long> charP);

/// The Drinfeld double of C_n over F_charP (charP | n), with its standard
/// non-symmetric R-matrix.
CatalogEntry drinfeld_double_group(long n, long charP);

}  // namespace modcat
