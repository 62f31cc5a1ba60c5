#include "mpsorf/measure.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "mpsorf/fft.hpp"

namespace mpsorf {

CircleMeasure::CircleMeasure(CircleGrid grid, std::vector<double> density,
                             std::vector<Atom> atoms, bool probability)
    : grid_(std::move(grid)),
      density_(std::move(density)),
      atoms_(std::move(atoms)),
      probability_(probability) {
    if (static_cast<int>(density_.size()) != grid_.size())
        throw ValidationError("CircleMeasure: density size does not match grid");
    for (double& d : density_) {
        if (d < 0.0) {
            if (d < -1e-12) throw ValidationError("CircleMeasure: negative density sample");
            d = 0.0;  // roundoff from |f| = 1
        }
    }
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
        auto& atom = atoms_[a];
        const double r = std::abs(atom.position);
        if (std::abs(r - 1.0) > 1e-12)
            throw ValidationError("CircleMeasure: atom position must be on the circle");
        atom.position /= r;
        if (!(atom.mass > 0.0))
            throw ValidationError("CircleMeasure: atom mass must be positive");
        for (std::size_t b = 0; b < a; ++b)
            if (std::abs(atoms_[b].position - atom.position) < 1e-12)
                throw ValidationError("CircleMeasure: atom positions must be distinct");
        for (const cplx& t : grid_.nodes())
            if (std::abs(t - atom.position) < 1e-9)
                throw AtomCollision(
                    "CircleMeasure: atom sits on a grid node; rebuild the grid with "
                    "CircleGrid::with_clearance");
    }
    double mass = integrate_real(grid_, density_);
    for (const Atom& a : atoms_) mass += a.mass;
    total_mass_ = mass;
    if (probability_ && std::abs(mass - 1.0) > 1e-9)
        throw ValidationError("CircleMeasure: total mass " + std::to_string(mass) +
                              " is not 1 within 1e-9");
}

CircleMeasure CircleMeasure::lebesgue(CircleGrid grid) {
    std::vector<double> d(static_cast<std::size_t>(grid.size()), 1.0);
    return CircleMeasure(std::move(grid), std::move(d), {}, true);
}

cplx CircleMeasure::integrate(std::span<const cplx> samples,
                              std::span<const cplx> at_atoms) const {
    if (static_cast<int>(samples.size()) != grid_.size())
        throw ValidationError("CircleMeasure::integrate: sample count mismatch");
    if (!atoms_.empty() && at_atoms.size() != atoms_.size())
        throw ValidationError("CircleMeasure::integrate: atom values missing");
    long double re = 0.0L, im = 0.0L;
    for (std::size_t j = 0; j < samples.size(); ++j) {
        const cplx v = samples[j] * density_[j];
        re += v.real();
        im += v.imag();
    }
    const long double inv = 1.0L / static_cast<long double>(grid_.size());
    cplx acc{static_cast<double>(re * inv), static_cast<double>(im * inv)};
    for (std::size_t a = 0; a < atoms_.size(); ++a) acc += atoms_[a].mass * at_atoms[a];
    return acc;
}

cplx herglotz_interior(const CircleMeasure& mu, cplx z) {
    if (!(std::abs(z) < 1.0))
        throw ValidationError("herglotz_interior: z must be interior");
    const auto& nodes = mu.grid().nodes();
    const auto& dens = mu.density();
    long double re = 0.0L, im = 0.0L;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        const cplx v = (nodes[j] + z) / (nodes[j] - z) * dens[j];
        re += v.real();
        im += v.imag();
    }
    const long double inv = 1.0L / static_cast<long double>(mu.grid().size());
    cplx acc{static_cast<double>(re * inv), static_cast<double>(im * inv)};
    for (const Atom& a : mu.atoms()) acc += a.mass * (a.position + z) / (a.position - z);
    return acc;
}

std::vector<cplx> herglotz_boundary_all(const CircleMeasure& mu) {
    const std::vector<double> conj = detail::conjugate_function(mu.density());
    const auto& nodes = mu.grid().nodes();
    std::vector<cplx> out(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j)
        out[j] = cplx{mu.density()[j], conj[j]};
    for (const Atom& a : mu.atoms())
        for (std::size_t j = 0; j < nodes.size(); ++j)
            out[j] += a.mass * (a.position + nodes[j]) / (a.position - nodes[j]);
    return out;
}

cplx herglotz_boundary(const CircleMeasure& mu, int node_index) {
    if (node_index < 0 || node_index >= mu.grid().size())
        throw ValidationError("herglotz_boundary: node index out of range");
    const cplx t = mu.grid().node(node_index);
    for (const Atom& a : mu.atoms())
        if (std::abs(t - a.position) < 1e-9)
            throw AtomCollision("herglotz_boundary: node coincides with an atom");
    return herglotz_boundary_all(mu)[static_cast<std::size_t>(node_index)];
}

cplx schur_from_measure(const CircleMeasure& mu, cplx z) {
    if (!(std::abs(z) < 1.0))
        throw ValidationError("schur_from_measure: z must be interior");
    if (std::abs(z) < 1e-14) {
        // limit of (F-1)/(z(F+1)) at 0: conj of the first Fourier coefficient
        // of mu, i.e. int t^{-1} dmu(t)
        const auto& nodes = mu.grid().nodes();
        const auto& dens = mu.density();
        long double re = 0.0L, im = 0.0L;
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const cplx v = std::conj(nodes[j]) * dens[j];
            re += v.real();
            im += v.imag();
        }
        const long double inv = 1.0L / static_cast<long double>(mu.grid().size());
        cplx c1{static_cast<double>(re * inv), static_cast<double>(im * inv)};
        for (const Atom& a : mu.atoms()) c1 += a.mass * std::conj(a.position);
        return c1 / mu.total_mass();
    }
    const cplx f = herglotz_interior(mu, z);
    return (f - mu.total_mass()) / (z * (f + mu.total_mass()));
}

CircleMeasure second_kind_measure(const CircleMeasure& mu) {
    const std::vector<cplx> f = herglotz_boundary_all(mu);
    std::vector<double> density(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double d = (1.0 / f[j]).real();
        density[j] = std::max(d, 0.0);
    }
    const double mass = integrate_real(mu.grid(), density);
    return CircleMeasure(mu.grid(), std::move(density), {}, std::abs(mass - 1.0) <= 1e-9);
}

std::string measure_to_json(const CircleMeasure& mu) {
    nlohmann::json j;
    j["M"] = mu.grid().size();
    j["phase"] = mu.grid().phase();
    j["density"] = mu.density();
    nlohmann::json atoms = nlohmann::json::array();
    for (const Atom& a : mu.atoms())
        atoms.push_back({{"theta", std::arg(a.position)}, {"mass", a.mass}});
    j["atoms"] = atoms;
    j["probability"] = mu.probability();
    return j.dump();
}

CircleMeasure measure_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("measure_from_json: ") + e.what());
    }
    try {
        CircleGrid grid(j.at("M").get<int>(), j.value("phase", 0.0));
        std::vector<double> density = j.at("density").get<std::vector<double>>();
        std::vector<Atom> atoms;
        for (const auto& a : j.value("atoms", nlohmann::json::array()))
            atoms.push_back({std::polar(1.0, a.at("theta").get<double>()),
                             a.at("mass").get<double>()});
        return CircleMeasure(std::move(grid), std::move(density), std::move(atoms),
                             j.value("probability", false));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("measure_from_json: ") + e.what());
    }
}

}  // namespace mpsorf
