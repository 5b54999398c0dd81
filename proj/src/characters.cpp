#include "genusforge/characters.hpp"

#include "genusforge/numbers.hpp"
#include "genusforge/poly.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace genusforge {

namespace {

// Beta numbers (first-column hook lengths) of a shape: b_i = lambda_i + rows - 1 - i.
// They are distinct and nonnegative; a rim hook of length r is removable iff
// some b has b - r >= 0 and b - r is not itself a beta number. The height of
// the hook is the number of beta numbers strictly between b - r and b.
std::vector<int> beta_numbers(const std::vector<int>& parts) {
    int rows = static_cast<int>(parts.size());
    std::vector<int> betas(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i)
        betas[static_cast<size_t>(i)] = parts[static_cast<size_t>(i)] + rows - 1 - i;
    return betas;
}

std::vector<int> shape_from_betas(std::vector<int> betas) {
    std::sort(betas.begin(), betas.end(), std::greater<int>());
    int rows = static_cast<int>(betas.size());
    std::vector<int> parts;
    for (int i = 0; i < rows; ++i) {
        int part = betas[static_cast<size_t>(i)] - (rows - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return parts;
}

using MnMemo = std::map<std::pair<std::vector<int>, size_t>, Int>;

Int mn_rec(const std::vector<int>& parts, const std::vector<int>& comp, size_t idx,
           MnMemo& memo) {
    if (idx == comp.size()) return 1;  // empty shape, empty composition
    auto key = std::make_pair(parts, idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = comp[idx];
    std::vector<int> betas = beta_numbers(parts);
    int max_beta = 0;
    for (int b : betas) max_beta = std::max(max_beta, b);
    std::vector<char> is_beta(static_cast<size_t>(max_beta) + 1, 0);
    for (int b : betas) is_beta[static_cast<size_t>(b)] = 1;

    Int total = 0;
    for (size_t pos = 0; pos < betas.size(); ++pos) {
        int b = betas[pos];
        int target = b - r;
        if (target < 0 || is_beta[static_cast<size_t>(target)]) continue;
        int height = 0;
        for (int other : betas)
            if (other > target && other < b) ++height;
        std::vector<int> child_betas = betas;
        child_betas[pos] = target;
        std::vector<int> child = shape_from_betas(std::move(child_betas));
        Int sub = mn_rec(child, comp, idx + 1, memo);
        if (height % 2 == 0)
            total += sub;
        else
            total -= sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

}  // namespace

Int mn_character(const Partition& shape, const CycleType& type) {
    if (shape.sum() != type.n())
        throw std::domain_error("mn_character: shape and class sizes differ");
    std::vector<int> comp = type.parts();
    MnMemo memo;
    return mn_rec(shape.parts(), comp, 0, memo);
}

Int mn_character(const Partition& shape, const std::vector<int>& composition) {
    long total = 0;
    for (int part : composition) {
        if (part < 1) throw std::domain_error("mn_character: composition parts must be positive");
        total += part;
    }
    if (total != shape.sum())
        throw std::domain_error("mn_character: composition does not sum to shape size");
    MnMemo memo;
    return mn_rec(shape.parts(), composition, 0, memo);
}

Int chi_hook_on_ncycle(const HookShape& h) {
    return (h.leg() % 2 == 1) ? Int(1) : Int(-1);
}

Int chi_hook_on_involution(const HookShape& h) {
    if (h.n % 2 != 0)
        throw std::domain_error("chi_hook_on_involution: point count must be even");
    long leg = h.leg();
    long half = (h.n - 2) / 2;
    if (h.arm % 2 == 0) {
        Int c = binomial(half, (h.arm - 2) / 2);
        return (((leg - 1) / 2) % 2 == 0) ? c : -c;
    }
    Int c = binomial(half, (h.arm - 1) / 2);
    return ((leg / 2) % 2 == 0) ? c : -c;
}

Int chi_hook_general(const HookShape& h, const CycleType& type) {
    if (type.n() != h.n)
        throw std::domain_error("chi_hook_general: class size does not match shape");
    int deg = h.arm;
    // xi/(1-xi) truncated at xi^deg: coefficients 0, 1, 1, ..., 1.
    ExactPoly prod = ExactPoly::geometric_series(deg);
    prod.set_coeff(0, Rat(0));
    for (int r : type.support()) {
        // (1 - xi^r) is 1 modulo xi^(deg+1) when r exceeds the truncation.
        if (r > deg) continue;
        ExactPoly factor = ExactPoly::constant(deg, Rat(1));
        factor.set_coeff(r, Rat(-1));
        prod = prod * factor.pow(type.count(r));
    }
    Int value = to_integer(prod.coeff(deg));
    long sign_exp = h.leg() + type.total_cycles();
    return (sign_exp % 2 == 0) ? value : -value;
}

Rat f_weight(int n_points, int arm) {
    if (n_points < 2 || n_points % 2 != 0)
        throw std::domain_error("f_weight: point count must be even and positive");
    if (arm < 1 || arm > n_points) throw std::domain_error("f_weight: arm out of range");
    long leg = n_points + 1 - arm;
    long half = (n_points - 2) / 2;
    Int num;
    long sign_exp;
    if (arm % 2 == 0) {
        num = binomial(half, (arm - 2) / 2);
        sign_exp = (leg - 1) / 2;
    } else {
        num = binomial(half, (arm - 1) / 2);
        sign_exp = (leg + 2) / 2;
    }
    Int den = binomial(n_points - 1, arm - 1);
    Rat out = make_rat(num, den);
    return (sign_exp % 2 == 0) ? out : -out;
}

Rat signed_f_weight(int n_points, int arm) {
    Rat f = f_weight(n_points, arm);
    long leg = n_points + 1 - arm;
    return (leg % 2 == 0) ? f : -f;
}

Rat q_weight(int half_n, int m) {
    if (half_n < 0 || m < 0 || m > half_n) throw std::domain_error("q_weight: m out of range");
    Int num = double_factorial(2L * m - 1) * double_factorial(2L * (half_n - m) - 1);
    return make_rat(num, double_factorial(2L * half_n - 1));
}

}  // namespace genusforge
