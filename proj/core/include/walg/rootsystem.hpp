#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "walg/ratfun.hpp"

namespace walg {

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Element of the weight space, coordinates in the simple-root basis.
/// All geometry goes through the rational Gram matrix; no Euclidean
/// coordinates appear anywhere.
class Weight {
public:
    Weight() = default;
    Weight(RootSystemPtr rs, std::vector<RatFun> coords);

    const RootSystemPtr& rs() const { return rs_; }
    const std::vector<RatFun>& coords() const { return coords_; }
    const RatFun& coord(int i) const { return coords_.at(i); }
    bool is_zero() const;

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    Weight operator*(const RatFun& c) const;
    Weight operator*(const Rat& c) const;
    bool operator==(const Weight& o) const;

    std::string to_string() const;

private:
    RootSystemPtr rs_;
    std::vector<RatFun> coords_;
};

/// Root-system data for the classical families, longest roots normalized to
/// squared norm 2. The coupling g lives in the ambient symbol table.
class RootSystem : public std::enable_shared_from_this<RootSystem> {
public:
    enum class Family { A, B, C, D };

    /// code is "A1".."A4", "B2".., "C2".., "D3"..; tab must contain "g".
    static RootSystemPtr make(const std::string& code, SymTab tab);
    static RootSystemPtr make(Family f, int rank, SymTab tab);

    Family family() const { return family_; }
    int rank() const { return rank_; }
    const std::string& code() const { return code_; }
    const SymTab& tab() const { return tab_; }

    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<std::vector<Rat>>& gram() const { return gram_; }
    const std::vector<std::vector<Rat>>& gram_inv() const { return gram_inv_; }
    const std::vector<int>& exponents() const { return exponents_; }
    int dual_coxeter() const { return hvee_; }
    int dim_g() const { return dimg_; }

    /// simple root e_i / coroot e_i^vee (0-based index)
    Weight simple_root(int i) const;
    Weight coroot(int i) const;
    Weight fundamental_weight(int i) const;  // omega_i
    Weight fundamental_coweight(int i) const; // omega_i^vee
    Weight weyl_vector() const;               // rho
    Weight weyl_covector() const;             // rho^vee
    Weight zero_weight() const;
    Weight weight_from_root_coords(const std::vector<RatFun>& c) const;

    /// Q = g rho + (2/g) rho^vee
    Weight background_charge() const;
    /// c = rank + 6 <Q,Q>
    RatFun central_charge() const;

    RatFun pairing(const Weight& u, const Weight& v) const;
    /// Delta_alpha = <alpha/2, Q - alpha/2>
    RatFun conformal_weight(const Weight& alpha) const;

    /// B2 spinor-track weights h_1..h_4 (h_1 = omega_2, then subtract e2,e1,e2)
    /// and the vector-track h~_1..h~_4. Throws unless this is B2.
    std::array<Weight, 4> b2_h_weights() const;
    std::array<Weight, 4> b2_htilde_weights() const;

    /// sl(n): h_k = omega_1 - e_1 - ... - e_{k-1}, k = 1..n. Throws unless type A.
    std::vector<Weight> type_a_h_weights() const;

    /// exponents/h_vee/dim table rows for the exceptional algebras (data only)
    struct ExceptionalData {
        std::string code;
        std::vector<int> exponents;
        int hvee;
        int dimg;
    };
    static const std::vector<ExceptionalData>& exceptional_table();

private:
    RootSystem() = default;

    Family family_;
    int rank_ = 0;
    std::string code_;
    SymTab tab_;
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<Rat>> gram_;
    std::vector<std::vector<Rat>> gram_inv_;
    std::vector<std::vector<Rat>> omega_;      // omega_[i] = coords of omega_i
    std::vector<std::vector<Rat>> omega_vee_;  // coords of omega_i^vee
    std::vector<int> exponents_;
    int hvee_ = 0;
    int dimg_ = 0;
};

} // namespace walg
