#pragma once

/**
 * @file catalog.hpp
 * @brief Machine-readable catalog of every published relation.
 *
 * The catalog is loaded from one JSON document per family (see
 * data/catalog/). Coefficient formulas live there as expression trees,
 * keeping the files auditable independently of the code. The environment
 * variable ASKEY_CATALOG_DIR overrides the data directory.
 */

#include <optional>

#include "askey/contiguity.hpp"
#include "askey/expr.hpp"
#include "askey/shift.hpp"

namespace askey {

enum class ChiKind { None, Zero, Expr, WeightRatio };

struct A2Entry {
    std::string id;
    FamilyId family;
    ShiftMap shift;
    ExprPtr lambda_plus, phi0_plus, phim1_plus;
    ExprPtr lambda_minus, phi0_minus, phi1_minus;
    // Christoffel/Geronimus data (q-Racah and Racah only)
    ExprPtr lambda_nu;
    ChiKind chi_kind = ChiKind::None;
    ExprPtr chi; // Expr: the value; WeightRatio: chi = w(N; rho) / chi
};

enum class Phi0Mode { Lambda0MinusSum, NegSum, Expr };

struct B2Entry {
    std::string id;
    FamilyId family;
    ShiftMap shift;
    std::pair<std::string, std::string> via; // the two one-step relations composing it
    ExprPtr lambda_plus, phi_p1, phi_m1;
    Phi0Mode phi0_mode = Phi0Mode::Lambda0MinusSum;
    ExprPtr phi0; // only for Phi0Mode::Expr
};

struct B2pEntry {
    std::string id;
    FamilyId family;
    ShiftMap shift;
    std::pair<std::string, std::string> via;
    // plus form: R_i = Phi0 R_i + Phim1 R_{i-1} + Phim2 R_{i-2} at (x_bar, rho_bar)
    ExprPtr phi0_plus, phim2_plus;
    Phi0Mode phim1_mode = Phi0Mode::Lambda0MinusSum; // Lambda0MinusSum here means 1 - sum
    ExprPtr phim1_plus;
    // minus form
    ExprPtr lambda_minus, phi_p2_minus, phi0_minus;
    Phi0Mode phip1_mode = Phi0Mode::Lambda0MinusSum;
    ExprPtr phip1_minus;
};

/// One Bannai-Ito <-> complementary Bannai-Ito relation pair (B or I list).
struct BIEntry {
    std::string id;
    char side;    // 'B': left side carries B_i; 'I': left side carries I_i
    int n_parity; // required parity of N (0 even, 1 odd)
    int x_offset = 0;
    int n_offset = 0;
    ExprPtr bar_alpha, bar_beta, bar_gamma; // in the base alpha, beta, gamma
    ExprPtr z0[2], zm[2], w0[2], wp[2];     // indexed by the parity of i
    ExprPtr omega;
};

/// One generalized 4phi3 relation (GI..GVI).
struct GEntry {
    std::string id;
    bool minus_form = false;
    ShiftMap shift; // family G moves, including the argument z
    ExprPtr c0, cm1;               // plus form coefficients
    ExprPtr lambda, phi1, phi0;    // minus form (GIII)
};

struct LimitRow {
    std::string source;
    std::string target; // "trivial" when the relation degenerates
};

class Catalog {
public:
    /// Load every family file from `dir`.
    static Catalog load(const std::string& dir);

    /// Shared instance from ASKEY_CATALOG_DIR or the build-time default.
    static const Catalog& instance();

    const std::vector<A2Entry>& a2(FamilyId f) const;
    const std::vector<B2Entry>& b2(FamilyId f) const;
    const std::vector<B2pEntry>& b2p(FamilyId f) const;
    const std::vector<BIEntry>& bi_entries() const { return bi_; }
    const std::vector<GEntry>& g_entries() const { return g_; }

    const A2Entry& a2_by_id(const std::string& id) const;
    const B2Entry& b2_by_id(const std::string& id) const;
    const B2pEntry& b2p_by_id(const std::string& id) const;
    const BIEntry& bi_by_id(const std::string& id) const;
    const GEntry& g_by_id(const std::string& id) const;

    /// All published ids of a family for one relation kind (trivial excluded).
    std::vector<std::string> list_ids(FamilyId f, RelationKind kind) const;

    /// Published limit label: which target-family relation a source relation becomes.
    std::string limit_correspondence(const std::string& source_id, FamilyId target) const;

    RelationInstance instantiate(const A2Entry& e, Direction dir, const ParameterSet& params) const;
    RelationInstance instantiate(const B2Entry& e, const ParameterSet& params) const;
    RelationInstance instantiate(const B2pEntry& e, Direction dir, const ParameterSet& params) const;
    /// BI entries expand to two relations: 'a' (plus-like) and 'b' (minus-like).
    RelationInstance instantiate(const BIEntry& e, Direction dir, const ParameterSet& params) const;
    RelationInstance instantiate(const GEntry& e, const ParameterSet& params) const;

    /// Barred parameter set of a BI entry.
    ParameterSet bi_barred(const BIEntry& e, const ParameterSet& params) const;

    /// lambda_nu (and chi when printed) for a spectral-transform entry.
    Rational eval_lambda_nu(const A2Entry& e, const ParameterSet& params) const;
    std::optional<Rational> eval_chi(const A2Entry& e, const ParameterSet& params) const;

private:
    std::map<FamilyId, std::vector<A2Entry>> a2_;
    std::map<FamilyId, std::vector<B2Entry>> b2_;
    std::map<FamilyId, std::vector<B2pEntry>> b2p_;
    std::vector<BIEntry> bi_;
    std::vector<GEntry> g_;
    std::map<FamilyId, std::vector<LimitRow>> limits_;
};

} // namespace askey
