#include "tunnel/susyqm.hpp"

#include "tunnel/errors.hpp"

#include <cmath>
#include <sstream>

namespace tunnel {

using specfun::kPi;

namespace {

double sech(double z) { return 1.0 / std::cosh(z); }

}  // namespace

// ---------------------------------------------------------------- SusyLevel

SusyLevel::SusyLevel(int ell) : ell_(ell) {
    if (ell < 1) throw DomainError("SusyLevel: ell must be >= 1");
}

double SusyLevel::superpotential(double z) const { return ell_ * std::tanh(z); }

double SusyLevel::superpotential_derivative(double z) const {
    const double s = sech(z);
    return ell_ * s * s;
}

double SusyLevel::potential(double z) const {
    const double s = sech(z);
    return static_cast<double>(ell_ * ell_) - static_cast<double>(ell_ * (ell_ + 1)) * s * s;
}

// ---------------------------------------------------------------- SusyState

SusyState::SusyState(Terms terms, std::optional<double> wavenumber, double energy)
    : wavenumber_(wavenumber), energy_(energy) {
    for (const auto& [key, c] : terms) add(key.first, key.second, c);
    prune();
}

SusyState SusyState::monomial(int tanh_power, int sech_power, Complex coefficient,
                              std::optional<double> wavenumber, double energy) {
    if (tanh_power < 0 || sech_power < 0) {
        throw DomainError("SusyState: exponents must be non-negative");
    }
    SusyState s;
    s.wavenumber_ = wavenumber;
    s.energy_ = energy;
    s.add(tanh_power, sech_power, coefficient);
    s.prune();
    return s;
}

void SusyState::add(int a, int b, Complex c) {
    if (c == Complex{}) return;
    if (a >= 2) {
        add(a - 2, b, c);
        add(a - 2, b + 2, -c);
        return;
    }
    terms_[{a, b}] += c;
}

void SusyState::prune() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second == Complex{}; });
}

Complex SusyState::coefficient(int tanh_power, int sech_power) const {
    const auto it = terms_.find({tanh_power, sech_power});
    return it == terms_.end() ? Complex{} : it->second;
}

Complex SusyState::operator()(double z) const {
    const double t = std::tanh(z);
    const double s = sech(z);
    Complex sum{};
    for (const auto& [key, c] : terms_) {
        const double basis = (key.first == 1 ? t : 1.0) * std::pow(s, key.second);
        sum += c * basis;
    }
    if (wavenumber_) sum *= std::polar(1.0, *wavenumber_ * z);
    return sum;
}

SusyState SusyState::derivative() const {
    SusyState out;
    out.wavenumber_ = wavenumber_;
    out.energy_ = energy_;
    const double k = wavenumber_.value_or(0.0);
    for (const auto& [key, c] : terms_) {
        const auto [a, b] = key;
        // d tanh = sech^2, d sech = -sech tanh
        if (a > 0) out.add(a - 1, b + 2, c * static_cast<double>(a));
        if (b > 0) out.add(a + 1, b, -c * static_cast<double>(b));
        if (k != 0.0) out.add(a, b, c * Complex{0.0, k});
    }
    out.prune();
    return out;
}

SusyState SusyState::times_tanh() const {
    SusyState out;
    out.wavenumber_ = wavenumber_;
    out.energy_ = energy_;
    for (const auto& [key, c] : terms_) out.add(key.first + 1, key.second, c);
    out.prune();
    return out;
}

SusyState SusyState::times_sech_squared() const {
    SusyState out;
    out.wavenumber_ = wavenumber_;
    out.energy_ = energy_;
    for (const auto& [key, c] : terms_) out.add(key.first, key.second + 2, c);
    out.prune();
    return out;
}

SusyState SusyState::scaled(Complex factor) const {
    SusyState out;
    out.wavenumber_ = wavenumber_;
    out.energy_ = energy_;
    for (const auto& [key, c] : terms_) out.add(key.first, key.second, c * factor);
    out.prune();
    return out;
}

SusyState SusyState::with_energy(double energy) const {
    SusyState out = *this;
    out.energy_ = energy;
    return out;
}

double SusyState::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& kv : terms_) m = std::max(m, std::abs(kv.second));
    return m;
}

SusyState operator+(const SusyState& a, const SusyState& b) {
    if (a.wavenumber_ != b.wavenumber_) {
        throw DomainError("SusyState: cannot add states with different plane-wave factors");
    }
    SusyState out = a;
    for (const auto& [key, c] : b.terms_) out.add(key.first, key.second, c);
    out.prune();
    return out;
}

SusyState operator-(const SusyState& a, const SusyState& b) { return a + b.scaled(-1.0); }

// ---------------------------------------------------------------- operations

std::pair<double, double> partner_potentials(const SusyLevel& lv, double z) {
    const double w = lv.superpotential(z);
    const double dw = lv.superpotential_derivative(z);
    return {w * w - dw, w * w + dw};
}

ShapeInvariance shape_invariance_residual(const SusyLevel& lv, std::span<const double> z_samples) {
    if (z_samples.empty()) throw DomainError("shape_invariance_residual: no sample points");
    std::vector<double> diff;
    diff.reserve(z_samples.size());
    for (double z : z_samples) {
        const double v_plus = partner_potentials(lv, z).second;
        const double v_minus_lower =
            lv.ell() == 1 ? 0.0 : partner_potentials(SusyLevel(lv.ell() - 1), z).first;
        diff.push_back(v_plus - v_minus_lower);
    }
    double mean = 0.0;
    for (double d : diff) mean += d;
    mean /= static_cast<double>(diff.size());
    ShapeInvariance r{mean, 0.0};
    for (double d : diff) r.max_deviation = std::max(r.max_deviation, std::abs(d - mean));
    return r;
}

double bound_energy(const SusyLevel& lv, int m) {
    const int l = lv.ell();
    if (m < 0 || m >= l) {
        std::ostringstream msg;
        msg << "bound_energy: O_" << l << " has bound states m = 0.." << l - 1 << ", got m = " << m;
        throw DomainError(msg.str());
    }
    return static_cast<double>(l * l - (l - m) * (l - m));
}

SusyState apply_ladder(const SusyLevel& lv, const SusyState& state) {
    return state.derivative().scaled(-1.0) + state.times_tanh().scaled(lv.ell());
}

SusyState apply_annihilator(const SusyLevel& lv, const SusyState& state) {
    return state.derivative() + state.times_tanh().scaled(lv.ell());
}

SusyState apply_hamiltonian(const SusyLevel& lv, const SusyState& state) {
    const double l = lv.ell();
    return state.derivative().derivative().scaled(-1.0) + state.scaled(l * l) -
           state.times_sech_squared().scaled(l * (l + 1.0));
}

SusyState eigen_residual(const SusyLevel& lv, const SusyState& state) {
    return apply_hamiltonian(lv, state) - state.scaled(state.energy());
}

SusyState bound_state(const SusyLevel& lv, int m) {
    const double energy = bound_energy(lv, m);
    const int l = lv.ell();
    const int n = l - m;

    // Ground-state normalization of O_n, sqrt(2 (2n-1)!) / (2^n (n-1)!), and
    // the ladder norm prod_{j<m} (E_m - E_j), both in log form.
    double log_norm = 0.5 * (std::log(2.0) + std::lgamma(2.0 * n)) - n * std::log(2.0) -
                      std::lgamma(static_cast<double>(n));
    double log_ladder = 0.0;
    for (int j = 0; j < m; ++j) log_ladder += std::log(energy - bound_energy(lv, j));
    log_norm -= 0.5 * log_ladder;

    SusyState state = SusyState::monomial(0, n, std::exp(log_norm));
    for (int level = n + 1; level <= l; ++level) state = apply_ladder(SusyLevel(level), state);
    return state.with_energy(energy);
}

SusyState scattering_state(const SusyLevel& lv, double k) {
    SusyState state = SusyState::monomial(0, 0, 1.0 / std::sqrt(2.0 * kPi), k);
    for (int level = 1; level <= lv.ell(); ++level) {
        const double n = level;
        state = apply_ladder(SusyLevel(level), state).scaled(1.0 / std::sqrt(k * k + n * n));
    }
    return state.with_energy(k * k + static_cast<double>(lv.ell() * lv.ell()));
}

Complex box_overlap(const SusyState& a, const SusyState& b, double half_width,
                    const specfun::QuadratureSpec& spec) {
    if (!(half_width > 0.0)) throw DomainError("box_overlap: half_width must be positive");
    auto re = specfun::integrate(
        [&](double z) { return (std::conj(a(z)) * b(z)).real(); }, -half_width, half_width, spec);
    auto im = specfun::integrate(
        [&](double z) { return (std::conj(a(z)) * b(z)).imag(); }, -half_width, half_width, spec);
    return {re.value, im.value};
}

// ---------------------------------------------------------------- density

SpectralDensity::SpectralDensity(SusyLevel lv, DensityMethod method, specfun::QuadratureSpec spec)
    : level_(lv), method_(method), spec_(spec) {
    spec_.validate();
}

double SpectralDensity::operator()(double k) const {
    if (method_ == DensityMethod::closed) {
        double sum = 0.0;
        for (int n = 1; n <= level_.ell(); ++n) {
            const double dn = n;
            sum += dn / (k * k + dn * dn);
        }
        return -sum / kPi;
    }
    const SusyState phi = scattering_state(level_, k);
    const double free_density = 1.0 / (2.0 * kPi);
    // |phi|^2 approaches 1/(2 pi) like sech^2 z; beyond |z| = 40 the remainder is below 1e-34.
    return specfun::integrate([&](double z) { return std::norm(phi(z)) - free_density; }, -40.0,
                              40.0, spec_)
        .value;
}

double spectral_density(const SusyLevel& lv, double k, DensityMethod method) {
    return SpectralDensity(lv, method)(k);
}

}  // namespace tunnel
