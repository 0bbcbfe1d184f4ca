#include "qsc/compressed_oracle.hpp"

#include <cmath>
#include <numbers>

namespace qsc {

namespace {

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t v = 1;
    while (exp--) v *= base;
    return v;
}

void check_dims(std::uint32_t nx, std::uint32_t ny) {
    if (nx < 1 || ny < 2) throw argument_error("OracleState: need |X| >= 1, |Y| >= 2");
    if (nx > kOracleMaxDim || ny > kOracleMaxDim)
        throw resource_error("OracleState: |X|, |Y| capped at 4");
}

// Applies a (radix x radix) matrix to the register whose digit has the given
// stride within the flattened index.
void apply_register_matrix(Eigen::VectorXcd& amp, std::uint64_t stride, std::uint32_t radix,
                           const Eigen::MatrixXcd& op) {
    const std::uint64_t dim = static_cast<std::uint64_t>(amp.size());
    const std::uint64_t period = stride * radix;
    Eigen::VectorXcd slot(radix);
    for (std::uint64_t hi = 0; hi < dim; hi += period) {
        for (std::uint64_t lo = 0; lo < stride; ++lo) {
            const std::uint64_t base = hi + lo;
            for (std::uint32_t d = 0; d < radix; ++d) slot(d) = amp(base + d * stride);
            slot = (op * slot).eval();
            for (std::uint32_t d = 0; d < radix; ++d) amp(base + d * stride) = slot(d);
        }
    }
}

// DFT on the value block of a register that also carries the fresh symbol.
Eigen::MatrixXcd dft_with_fixed_fresh(std::uint32_t ny, bool inverse) {
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(ny + 1, ny + 1);
    const Eigen::MatrixXcd f = dft_matrix(ny);
    if (inverse)
        op.topLeftCorner(ny, ny) = f.adjoint();
    else
        op.topLeftCorner(ny, ny) = f;
    return op;
}

// Comp on one cell: identity minus the rank-one uniform projector on the
// value block, plus the swap with the fresh symbol. Real and symmetric.
Eigen::MatrixXcd comp_matrix(std::uint32_t ny) {
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(ny));
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(ny + 1, ny + 1);
    op.topLeftCorner(ny, ny) =
        Eigen::MatrixXcd::Identity(ny, ny) -
        Eigen::MatrixXcd::Constant(ny, ny, 1.0 / static_cast<double>(ny));
    for (std::uint32_t v = 0; v < ny; ++v) {
        op(ny, v) = inv_sqrt;
        op(v, ny) = inv_sqrt;
    }
    return op;
}

} // namespace

OracleState::OracleState(std::uint32_t nx, std::uint32_t ny, Mode mode)
    : nx_(nx), ny_(ny), mode_(mode) {
    check_dims(nx, ny);
    const std::uint64_t db = ipow(ny_ + 1, nx_);
    amp_ = Vector::Zero(static_cast<Eigen::Index>(nx_ * ny_ * db));
}

OracleState OracleState::standard(std::uint32_t domain, std::uint32_t codomain) {
    OracleState state(domain, codomain, Mode::standard);
    const std::uint64_t db = ipow(codomain + 1, domain);
    const double amp = std::pow(static_cast<double>(codomain), -0.5 * domain);
    // Tables are the database basis states with no fresh digit.
    for (std::uint64_t d = 0; d < db; ++d) {
        std::uint64_t rest = d;
        bool fresh = false;
        for (std::uint32_t c = 0; c < domain; ++c) {
            if (rest % (codomain + 1) == codomain) { fresh = true; break; }
            rest /= codomain + 1;
        }
        if (!fresh) state.amp_(static_cast<Eigen::Index>(d)) = amp;
    }
    return state;
}

OracleState OracleState::compressed(std::uint32_t domain, std::uint32_t codomain) {
    OracleState state(domain, codomain, Mode::compressed);
    std::uint64_t all_fresh = 0;
    for (std::uint32_t c = 0; c < domain; ++c)
        all_fresh += static_cast<std::uint64_t>(codomain) * ipow(codomain + 1, c);
    state.amp_(static_cast<Eigen::Index>(all_fresh)) = 1.0;
    return state;
}

OracleState::Basis OracleState::decode(Eigen::Index index) const {
    Basis basis;
    std::uint64_t idx = static_cast<std::uint64_t>(index);
    const std::uint64_t db = ipow(ny_ + 1, nx_);
    std::uint64_t cells = idx % db;
    idx /= db;
    basis.y = static_cast<std::uint32_t>(idx % ny_);
    basis.x = static_cast<std::uint32_t>(idx / ny_);
    basis.cells.resize(nx_);
    for (std::uint32_t c = 0; c < nx_; ++c) {
        basis.cells[c] = static_cast<std::uint8_t>(cells % (ny_ + 1));
        cells /= ny_ + 1;
    }
    return basis;
}

Eigen::Index OracleState::encode(const Basis& basis) const {
    std::uint64_t cells = 0;
    for (std::uint32_t c = nx_; c-- > 0;)
        cells = cells * (ny_ + 1) + basis.cells[c];
    const std::uint64_t db = ipow(ny_ + 1, nx_);
    return static_cast<Eigen::Index>(
        (static_cast<std::uint64_t>(basis.x) * ny_ + basis.y) * db + cells);
}

void OracleState::count_query() {
    if (queries_ >= kOracleMaxQueries)
        throw resource_error("OracleState: query budget (4) exhausted");
    ++queries_;
}

Eigen::MatrixXcd dft_matrix(std::uint32_t d) {
    if (d < 2) throw argument_error("dft_matrix: dimension must be >= 2");
    Eigen::MatrixXcd f(d, d);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (std::uint32_t j = 0; j < d; ++j)
        for (std::uint32_t k = 0; k < d; ++k) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) *
                                 static_cast<double>(k) / static_cast<double>(d);
            f(j, k) = norm * std::complex<double>(std::cos(angle), std::sin(angle));
        }
    return f;
}

void qft_y(OracleState& state) {
    const std::uint64_t db = ipow(state.codomain() + 1, state.domain());
    apply_register_matrix(state.amplitudes(), db, state.codomain(), dft_matrix(state.codomain()));
}

void iqft_y(OracleState& state) {
    const std::uint64_t db = ipow(state.codomain() + 1, state.domain());
    apply_register_matrix(state.amplitudes(), db, state.codomain(),
                          dft_matrix(state.codomain()).adjoint());
}

void qft_cell(OracleState& state, std::uint32_t cell) {
    if (cell >= state.domain()) throw argument_error("qft_cell: cell out of range");
    apply_register_matrix(state.amplitudes(), ipow(state.codomain() + 1, cell),
                          state.codomain() + 1, dft_with_fixed_fresh(state.codomain(), false));
}

void iqft_cell(OracleState& state, std::uint32_t cell) {
    if (cell >= state.domain()) throw argument_error("iqft_cell: cell out of range");
    apply_register_matrix(state.amplitudes(), ipow(state.codomain() + 1, cell),
                          state.codomain() + 1, dft_with_fixed_fresh(state.codomain(), true));
}

namespace {

// y += D(x) as a basis permutation; fresh cells answer nothing.
void sto_permute(OracleState& state) {
    const auto& amp = state.amplitudes();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(amp.size());
    for (Eigen::Index i = 0; i < amp.size(); ++i) {
        if (amp(i) == 0.0) continue;
        auto basis = state.decode(i);
        const std::uint8_t value = basis.cells[basis.x];
        if (value != state.fresh_symbol())
            basis.y = (basis.y + value) % state.codomain();
        out(state.encode(basis)) += amp(i);
    }
    state.amplitudes() = std::move(out);
}

// D(x) -= y as a basis permutation; fresh cells unchanged.
void cell_shift_permute(OracleState& state) {
    const auto& amp = state.amplitudes();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(amp.size());
    const std::uint32_t ny = state.codomain();
    for (Eigen::Index i = 0; i < amp.size(); ++i) {
        if (amp(i) == 0.0) continue;
        auto basis = state.decode(i);
        const std::uint8_t value = basis.cells[basis.x];
        if (value != state.fresh_symbol())
            basis.cells[basis.x] = static_cast<std::uint8_t>((value + ny - basis.y % ny) % ny);
        out(state.encode(basis)) += amp(i);
    }
    state.amplitudes() = std::move(out);
}

void comp_all_cells(OracleState& state) {
    const Eigen::MatrixXcd op = comp_matrix(state.codomain());
    for (std::uint32_t c = 0; c < state.domain(); ++c)
        apply_register_matrix(state.amplitudes(), ipow(state.codomain() + 1, c),
                              state.codomain() + 1, op);
}

} // namespace

void sto_apply(OracleState& state) {
    if (state.mode() != OracleState::Mode::standard)
        throw state_error("sto_apply: state is not in standard mode");
    state.count_query();
    sto_permute(state);
}

void o_apply(OracleState& state) {
    if (state.mode() != OracleState::Mode::standard)
        throw state_error("o_apply: state is not in standard mode");
    state.count_query();
    iqft_y(state);
    cell_shift_permute(state);
    qft_y(state);
}

void comp_apply(OracleState& state) { comp_all_cells(state); }
void comp_dagger(OracleState& state) { comp_all_cells(state); }

void co_apply(OracleState& state) {
    if (state.mode() != OracleState::Mode::compressed)
        throw state_error("co_apply: state is not in compressed mode");
    state.count_query();
    comp_all_cells(state);
    sto_permute(state);
    comp_all_cells(state);
}

OracleState decompress(const OracleState& state) {
    OracleState out = state;
    comp_all_cells(out);
    out.mode_ = OracleState::Mode::standard;
    return out;
}

Eigen::VectorXd adversary_marginal(const OracleState& state) {
    const std::uint64_t db = ipow(state.codomain() + 1, state.domain());
    const std::uint32_t slots = state.domain() * state.codomain();
    Eigen::VectorXd marginal = Eigen::VectorXd::Zero(slots);
    for (std::uint32_t s = 0; s < slots; ++s) {
        double total = 0.0;
        for (std::uint64_t d = 0; d < db; ++d)
            total += std::norm(state.amplitudes()(static_cast<Eigen::Index>(s * db + d)));
        marginal(s) = total;
    }
    return marginal;
}

namespace {

void apply_adversary_unitary(OracleState& state, const Eigen::MatrixXcd& u) {
    const Eigen::Index slots = state.domain() * state.codomain();
    if (u.rows() != slots || u.cols() != slots)
        throw argument_error("run_adversary: unitary dimension mismatch");
    const Eigen::Index db = static_cast<Eigen::Index>(ipow(state.codomain() + 1, state.domain()));
    Eigen::Map<Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        view(state.amplitudes().data(), slots, db);
    view = (u * view).eval();
}

} // namespace

OracleState run_adversary(const AdversaryCircuit& circuit, OracleKind kind) {
    OracleState state = kind == OracleKind::standard
                            ? OracleState::standard(circuit.domain, circuit.codomain)
                            : OracleState::compressed(circuit.domain, circuit.codomain);
    for (std::size_t step = 0; step < circuit.unitaries.size(); ++step) {
        apply_adversary_unitary(state, circuit.unitaries[step]);
        if (step + 1 < circuit.unitaries.size()) {
            if (kind == OracleKind::standard)
                sto_apply(state);
            else
                co_apply(state);
        }
    }
    return state;
}

double projector_norm(const OracleState& state,
                      const std::function<bool(const std::vector<std::uint8_t>&)>& predicate) {
    if (state.mode() != OracleState::Mode::compressed)
        throw state_error("projector_norm: state is not in compressed mode");
    double total = 0.0;
    for (Eigen::Index i = 0; i < state.dimension(); ++i) {
        const auto a = state.amplitudes()(i);
        if (a == 0.0) continue;
        if (predicate(state.decode(i).cells)) total += std::norm(a);
    }
    return std::sqrt(total);
}

std::uint32_t max_recorded_cells(const OracleState& state, double tol) {
    std::uint32_t worst = 0;
    for (Eigen::Index i = 0; i < state.dimension(); ++i) {
        if (std::abs(state.amplitudes()(i)) <= tol) continue;
        const auto basis = state.decode(i);
        std::uint32_t recorded = 0;
        for (std::uint8_t cell : basis.cells)
            if (cell != state.fresh_symbol()) ++recorded;
        worst = std::max(worst, recorded);
    }
    return worst;
}

GapReport zhandry_gap_check(const AdversaryCircuit& circuit, const ClaimExtraction& extraction) {
    GapReport report;
    bool claims_seen = false;

    // A fresh cell never satisfies a claim: its label is the fresh symbol,
    // outside the claimable value range.
    const auto accumulate = [&](const OracleState& state) {
        double p = 0.0;
        for (Eigen::Index i = 0; i < state.dimension(); ++i) {
            const auto a = state.amplitudes()(i);
            if (a == 0.0) continue;
            const auto basis = state.decode(i);
            const auto claims = extraction(basis.x, basis.y);
            if (!claims_seen) {
                report.claims = claims.size();
                claims_seen = true;
            } else if (claims.size() != report.claims) {
                throw argument_error("zhandry_gap_check: claim lists must share one length");
            }
            bool correct = true;
            for (const auto& [cx, cy] : claims) {
                if (cx >= state.domain() || cy >= state.codomain())
                    throw argument_error("zhandry_gap_check: claim out of range");
                if (basis.cells[cx] != cy) { correct = false; break; }
            }
            if (correct) p += std::norm(a);
        }
        return p;
    };

    report.p = accumulate(run_adversary(circuit, OracleKind::standard));
    report.p_prime = accumulate(run_adversary(circuit, OracleKind::compressed));
    const double slack =
        std::sqrt(static_cast<double>(report.claims) / static_cast<double>(circuit.codomain));
    report.bound_holds = std::sqrt(report.p) <= std::sqrt(report.p_prime) + slack + 1e-9;
    return report;
}

Eigen::MatrixXcd random_unitary(Eigen::Index dim, Rng& rng) {
    Eigen::MatrixXcd ginibre(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c) {
            // Box-Muller
            const double u1 = std::max(rng.uniform(), 1e-300);
            const double u2 = rng.uniform();
            const double radius = std::sqrt(-2.0 * std::log(u1));
            ginibre(r, c) = std::complex<double>(radius * std::cos(2.0 * std::numbers::pi * u2),
                                                 radius * std::sin(2.0 * std::numbers::pi * u2));
        }
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(ginibre);
    Eigen::MatrixXcd q = qr.householderQ();
    const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const std::complex<double> d = r(j, j);
        q.col(j) *= std::abs(d) == 0.0 ? 1.0 : d / std::abs(d);
    }
    return q;
}

} // namespace qsc
