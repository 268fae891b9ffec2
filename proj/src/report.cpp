#include "zartan/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace zartan {

std::string version_string() { return "zartan 0.1.0"; }

Provenance make_provenance(const std::string& input, unsigned long long seed) {
    unsigned long long h = 0xcbf29ce484222325ULL;  // FNV-1a 64
    for (unsigned char c : input) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << h;
    return Provenance{hex.str(), seed, version_string()};
}

std::string report_json(const ComparisonReport& rep, const Provenance& prov) {
    nlohmann::json j;
    j["dim_zariski"] = rep.dim_zariski;
    j["dim_grothendieck"] = rep.dim_grothendieck;
    j["dim_zariski_relative"] = rep.dim_zariski_relative;
    j["dim_fiber_tangent"] = rep.dim_fiber_tangent;
    j["phi"] = {{"rank", rep.phi.rank},
                {"injective", rep.phi.injective},
                {"surjective_onto_relative", rep.phi.surjective_onto_relative},
                {"iso", rep.phi.iso}};
    j["theta"] = {{"rank", rep.theta.rank}, {"iso", rep.theta.iso}};
    j["upsilon"] = {{"defined", rep.upsilon.defined},
                    {"identities_hold", rep.upsilon.identities_hold}};
    j["extension"] = {{"algebraic", rep.extension.algebraic},
                      {"separable", rep.extension.separable.has_value()
                                        ? nlohmann::json(*rep.extension.separable)
                                        : nlohmann::json(nullptr)},
                      {"omega_dim", rep.extension.omega_dim}};
    j["sequence_checks"] = {{"seq5_ok", rep.conormal.seq5_ok},
                            {"seq6_ok", rep.conormal.seq6_ok},
                            {"lemma1_ok", rep.lemma1_ok},
                            {"lemma2_ok", rep.lemma2.ok}};
    j["theorem"] = {{"hypothesis", rep.hypothesis},
                    {"conclusion", rep.conclusion},
                    {"consistent", rep.consistent}};
    j["provenance"] = {{"input_hash", prov.input_hash},
                       {"seed", prov.seed},
                       {"version", prov.version}};
    return j.dump(2) + "\n";
}

namespace {

std::string vec_str(const std::vector<FElem>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + elem_str(v[i]);
    return out + ")";
}

const char* yn(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string matrix_str(const Matrix& m) {
    if (m.rows == 0 || m.cols == 0)
        return "  [ ] (" + std::to_string(m.rows) + " x " + std::to_string(m.cols) + ")\n";
    std::ostringstream out;
    for (size_t i = 0; i < m.rows; ++i) {
        out << "  [ ";
        for (size_t j = 0; j < m.cols; ++j) out << (j ? "  " : "") << elem_str(m.at(i, j));
        out << " ]\n";
    }
    return out.str();
}

std::string report_text(const ComparisonReport& rep) {
    std::ostringstream out;
    out << "residue fields     kappa(x) = " << rep.kappa_x_name
        << "   kappa(s) = " << rep.kappa_s_name << "\n";
    out << "dim T_x X                    = " << rep.dim_zariski << "\n";
    out << "dim T^(Gro)_x (X/S)          = " << rep.dim_grothendieck << "\n";
    out << "dim T^(Zar)_x (X/S)          = " << rep.dim_zariski_relative << "\n";
    out << "dim T_x X_s                  = " << rep.dim_fiber_tangent << "\n";
    out << "Phi:   rank " << rep.phi.rank << ", injective " << yn(rep.phi.injective)
        << ", onto T^(Zar) " << yn(rep.phi.surjective_onto_relative) << ", iso "
        << yn(rep.phi.iso) << "\n";
    out << "theta: rank " << rep.theta.rank << ", iso " << yn(rep.theta.iso) << "\n";
    out << "Upsilon: defined " << yn(rep.upsilon.defined);
    if (rep.upsilon.defined) out << ", inverse to Phi " << yn(rep.upsilon.identities_hold);
    out << "\n";
    out << "extension: algebraic " << yn(rep.extension.algebraic) << ", separable "
        << (rep.extension.separable.has_value() ? yn(*rep.extension.separable) : "undefined")
        << ", dim Omega = " << rep.extension.omega_dim << "\n";
    out << "checks: seq5 " << yn(rep.conormal.seq5_ok) << ", seq6 " << yn(rep.conormal.seq6_ok)
        << ", lemma1 " << yn(rep.lemma1_ok) << ", lemma2 " << yn(rep.lemma2.ok) << "\n";
    out << "theorem: hypothesis " << yn(rep.hypothesis) << ", conclusion " << yn(rep.conclusion)
        << ", consistent " << yn(rep.consistent) << "\n";
    return out.str();
}

std::string explain_text(const ComparisonReport& rep) {
    std::ostringstream out;
    out << report_text(rep) << "\n";
    out << "cotangent basis of M_x/M_x^2 (classes over kappa(x)):\n";
    if (rep.cotangent_basis.empty()) out << "  (zero space)\n";
    for (size_t i = 0; i < rep.cotangent_basis.size(); ++i)
        out << "  e" << i + 1 << " = [" << rep.cotangent_basis[i] << "]\n";

    out << "\nderivation basis of T^(Gro), as vectors (D(";
    for (size_t i = 0; i < rep.x_vars.size(); ++i) out << (i ? ", " : "") << rep.x_vars[i];
    out << ")):\n";
    if (rep.derivation_basis.empty()) out << "  (zero space)\n";
    for (size_t i = 0; i < rep.derivation_basis.size(); ++i)
        out << "  D" << i + 1 << " = " << vec_str(rep.derivation_basis[i]) << "\n";

    out << "\nT^(Zar) basis in the coordinates dual to (e_k):\n";
    if (rep.relative_basis.empty()) out << "  (zero space)\n";
    for (size_t i = 0; i < rep.relative_basis.size(); ++i)
        out << "  t" << i + 1 << " = " << vec_str(rep.relative_basis[i]) << "\n";

    out << "\nPhi in the bases (D_l) -> (e_k)^*:\n" << matrix_str(rep.phi.columns);
    out << "\ntheta in the bases (e_k) -> base-changed cotangent basis:\n"
        << matrix_str(rep.theta.m);
    if (rep.upsilon.defined)
        out << "\nUpsilon in the bases (t_l) -> (D_j):\n" << matrix_str(rep.upsilon.matrix);
    else
        out << "\nUpsilon: not defined (theta is not an isomorphism)\n";
    return out.str();
}

}  // namespace zartan
