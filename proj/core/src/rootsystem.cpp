#include "walg/rootsystem.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace walg {

namespace {

// exact inverse of a small rational matrix
std::vector<std::vector<Rat>> rat_inverse(std::vector<std::vector<Rat>> a)
{
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) throw std::domain_error("rat_inverse: singular");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        Rat p = a[c][c];
        for (int j = 0; j < n; ++j) { a[c][j] /= p; inv[c][j] /= p; }
        for (int i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (int j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

} // namespace

Weight::Weight(RootSystemPtr rs, std::vector<RatFun> coords)
    : rs_(std::move(rs)), coords_(std::move(coords))
{
    if (static_cast<int>(coords_.size()) != rs_->rank())
        throw std::invalid_argument("Weight: coordinate count != rank");
}

bool Weight::is_zero() const
{
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

Weight Weight::operator+(const Weight& o) const
{
    if (rs_.get() != o.rs_.get()) throw std::invalid_argument("Weight: root-system mismatch");
    std::vector<RatFun> c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return Weight(rs_, std::move(c));
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const
{
    std::vector<RatFun> c = coords_;
    for (auto& x : c) x = -x;
    return Weight(rs_, std::move(c));
}

Weight Weight::operator*(const RatFun& f) const
{
    std::vector<RatFun> c = coords_;
    for (auto& x : c) x *= f;
    return Weight(rs_, std::move(c));
}

Weight Weight::operator*(const Rat& f) const
{
    std::vector<RatFun> c = coords_;
    for (auto& x : c) x = x * f;
    return Weight(rs_, std::move(c));
}

bool Weight::operator==(const Weight& o) const
{
    return rs_.get() == o.rs_.get() && coords_ == o.coords_;
}

std::string Weight::to_string() const
{
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coords_.size(); ++i)
        os << (i ? ", " : "") << coords_[i].to_string();
    os << "]";
    return os.str();
}

RootSystemPtr RootSystem::make(const std::string& code, SymTab tab)
{
    if (code.size() < 2) throw std::invalid_argument("RootSystem: bad code " + code);
    char f = code[0];
    int r = std::stoi(code.substr(1));
    Family fam;
    switch (f) {
        case 'A': fam = Family::A; break;
        case 'B': fam = Family::B; break;
        case 'C': fam = Family::C; break;
        case 'D': fam = Family::D; break;
        default: throw std::invalid_argument("RootSystem: unsupported family in " + code);
    }
    return make(fam, r, std::move(tab));
}

RootSystemPtr RootSystem::make(Family f, int rank, SymTab tab)
{
    int minr = f == Family::A ? 1 : f == Family::D ? 3 : 2;
    if (rank < minr) throw std::invalid_argument("RootSystem: rank too small for family");
    auto rs = std::shared_ptr<RootSystem>(new RootSystem);
    rs->family_ = f;
    rs->rank_ = rank;
    rs->tab_ = std::move(tab);
    const int r = rank;

    auto& G = rs->gram_;
    G.assign(r, std::vector<Rat>(r, Rat(0)));
    auto chain = [&](Rat diag_last) {
        for (int i = 0; i < r; ++i) G[i][i] = 2;
        for (int i = 0; i + 1 < r; ++i) G[i][i + 1] = G[i + 1][i] = -1;
        G[r - 1][r - 1] = diag_last;
    };
    switch (f) {
        case Family::A: {
            rs->code_ = "A" + std::to_string(r);
            chain(Rat(2));
            for (int i = 1; i <= r; ++i) rs->exponents_.push_back(i);
            rs->hvee_ = r + 1;
            rs->dimg_ = r * (r + 2);
            break;
        }
        case Family::B: {
            // e_1..e_{r-1} long (norm 2), e_r short (norm 1)
            rs->code_ = "B" + std::to_string(r);
            chain(Rat(1));
            for (int i = 1; i <= r; ++i) rs->exponents_.push_back(2 * i - 1);
            rs->hvee_ = 2 * r - 1;
            rs->dimg_ = r * (2 * r + 1);
            break;
        }
        case Family::C: {
            // e_1..e_{r-1} short (norm 1), e_r long (norm 2)
            rs->code_ = "C" + std::to_string(r);
            for (int i = 0; i < r; ++i) G[i][i] = 1;
            for (int i = 0; i + 2 < r; ++i) G[i][i + 1] = G[i + 1][i] = Rat(-1, 2);
            if (r >= 2) G[r - 2][r - 1] = G[r - 1][r - 2] = -1;
            G[r - 1][r - 1] = 2;
            for (int i = 1; i <= r; ++i) rs->exponents_.push_back(2 * i - 1);
            rs->hvee_ = r + 1;
            rs->dimg_ = r * (2 * r + 1);
            break;
        }
        case Family::D: {
            // chain e_1..e_{r-1} with fork: e_r attached to e_{r-2}
            rs->code_ = "D" + std::to_string(r);
            for (int i = 0; i < r; ++i) G[i][i] = 2;
            for (int i = 0; i + 2 < r; ++i) G[i][i + 1] = G[i + 1][i] = -1;
            G[r - 3 >= 0 ? r - 3 : 0][r - 1] = G[r - 1][r - 3 >= 0 ? r - 3 : 0] = -1;
            for (int i = 1; i < r; ++i) rs->exponents_.push_back(2 * i - 1);
            rs->exponents_.push_back(r - 1);
            std::sort(rs->exponents_.begin(), rs->exponents_.end());
            rs->hvee_ = 2 * r - 2;
            rs->dimg_ = r * (2 * r - 1);
            break;
        }
    }

    // Cartan A_ij = 2 G_ij / G_ii
    rs->cartan_.assign(r, std::vector<int>(r, 0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rat a = 2 * G[i][j] / G[i][i];
            if (a.get_den() != 1)
                throw std::logic_error("RootSystem: non-integer Cartan entry");
            rs->cartan_[i][j] = static_cast<int>(a.get_num().get_si());
        }

    rs->gram_inv_ = rat_inverse(G);
    // omega_i: <e_j^vee, omega_i> = delta  <=>  sum_l A_{jl} c_l = delta_{ji}
    auto cartan_rat = std::vector<std::vector<Rat>>(r, std::vector<Rat>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) cartan_rat[i][j] = rs->cartan_[i][j];
    auto cartan_inv = rat_inverse(cartan_rat);
    rs->omega_.assign(r, std::vector<Rat>(r));
    for (int i = 0; i < r; ++i)
        for (int l = 0; l < r; ++l) rs->omega_[i][l] = cartan_inv[l][i];
    // omega_i^vee: sum_l c_l G_{lj} = delta_{ij}
    rs->omega_vee_.assign(r, std::vector<Rat>(r));
    for (int i = 0; i < r; ++i)
        for (int l = 0; l < r; ++l) rs->omega_vee_[i][l] = rs->gram_inv_[i][l];

    return rs;
}

Weight RootSystem::zero_weight() const
{
    return Weight(shared_from_this(),
                  std::vector<RatFun>(rank_, RatFun::zero(tab_)));
}

Weight RootSystem::weight_from_root_coords(const std::vector<RatFun>& c) const
{
    return Weight(shared_from_this(), c);
}

Weight RootSystem::simple_root(int i) const
{
    std::vector<RatFun> c(rank_, RatFun::zero(tab_));
    c[i] = RatFun::constant(tab_, 1);
    return Weight(shared_from_this(), std::move(c));
}

Weight RootSystem::coroot(int i) const
{
    std::vector<RatFun> c(rank_, RatFun::zero(tab_));
    c[i] = RatFun::constant(tab_, 2 / gram_[i][i]);
    return Weight(shared_from_this(), std::move(c));
}

Weight RootSystem::fundamental_weight(int i) const
{
    std::vector<RatFun> c(rank_);
    for (int l = 0; l < rank_; ++l) c[l] = RatFun::constant(tab_, omega_[i][l]);
    return Weight(shared_from_this(), std::move(c));
}

Weight RootSystem::fundamental_coweight(int i) const
{
    std::vector<RatFun> c(rank_);
    for (int l = 0; l < rank_; ++l) c[l] = RatFun::constant(tab_, omega_vee_[i][l]);
    return Weight(shared_from_this(), std::move(c));
}

Weight RootSystem::weyl_vector() const
{
    Weight w = fundamental_weight(0);
    for (int i = 1; i < rank_; ++i) w = w + fundamental_weight(i);
    return w;
}

Weight RootSystem::weyl_covector() const
{
    Weight w = fundamental_coweight(0);
    for (int i = 1; i < rank_; ++i) w = w + fundamental_coweight(i);
    return w;
}

Weight RootSystem::background_charge() const
{
    RatFun g = RatFun::symbol(tab_, "g");
    RatFun two_over_g = RatFun::constant(tab_, 2) / g;
    return weyl_vector() * g + weyl_covector() * two_over_g;
}

RatFun RootSystem::central_charge() const
{
    Weight q = background_charge();
    return RatFun::constant(tab_, rank_) + RatFun::constant(tab_, 6) * pairing(q, q);
}

RatFun RootSystem::pairing(const Weight& u, const Weight& v) const
{
    if (u.rs().get() != this || v.rs().get() != this)
        throw std::invalid_argument("pairing: root-system mismatch");
    RatFun acc = RatFun::zero(tab_);
    for (int i = 0; i < rank_; ++i) {
        if (u.coord(i).is_zero()) continue;
        for (int j = 0; j < rank_; ++j) {
            if (gram_[i][j] == 0 || v.coord(j).is_zero()) continue;
            acc += u.coord(i) * v.coord(j) * gram_[i][j];
        }
    }
    return acc;
}

RatFun RootSystem::conformal_weight(const Weight& alpha) const
{
    Weight q = background_charge();
    Rat half(1, 2);
    Weight a2 = alpha * half;
    return pairing(a2, q - a2);
}

std::array<Weight, 4> RootSystem::b2_h_weights() const
{
    if (!(family_ == Family::B && rank_ == 2))
        throw std::invalid_argument("b2_h_weights: system is not B2");
    std::array<Weight, 4> h = {fundamental_weight(1), zero_weight(), zero_weight(),
                               zero_weight()};
    h[1] = h[0] - simple_root(1);
    h[2] = h[1] - simple_root(0);
    h[3] = h[2] - simple_root(1);
    return h;
}

std::array<Weight, 4> RootSystem::b2_htilde_weights() const
{
    if (!(family_ == Family::B && rank_ == 2))
        throw std::invalid_argument("b2_htilde_weights: system is not B2");
    std::array<Weight, 4> h = {fundamental_weight(0), zero_weight(), zero_weight(),
                               zero_weight()};
    h[1] = h[0] - simple_root(0);
    h[2] = h[1] - simple_root(1);
    h[3] = h[2] - simple_root(0);
    return h;
}

std::vector<Weight> RootSystem::type_a_h_weights() const
{
    if (family_ != Family::A)
        throw std::invalid_argument("type_a_h_weights: system is not type A");
    std::vector<Weight> h;
    h.push_back(fundamental_weight(0));
    for (int k = 1; k <= rank_; ++k) h.push_back(h.back() - simple_root(k - 1));
    return h;
}

const std::vector<RootSystem::ExceptionalData>& RootSystem::exceptional_table()
{
    static const std::vector<ExceptionalData> table = {
        {"G2", {1, 5}, 4, 14},
        {"F4", {1, 5, 7, 11}, 9, 52},
        {"E6", {1, 4, 5, 7, 8, 11}, 12, 78},
        {"E7", {1, 5, 7, 9, 11, 13, 17}, 18, 133},
        {"E8", {1, 7, 11, 13, 17, 19, 23, 29}, 30, 248},
    };
    return table;
}

} // namespace walg
