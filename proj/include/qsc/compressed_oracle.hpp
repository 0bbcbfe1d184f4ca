#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "qsc/errors.hpp"
#include "qsc/rng.hpp"

namespace qsc {

/// Dimension caps for the micro-simulator: the database register alone has
/// (|Y|+1)^|X| basis states.
inline constexpr std::uint32_t kOracleMaxDim = 4;
inline constexpr std::uint32_t kOracleMaxQueries = 4;

inline constexpr double kUnitarityTol = 1e-10;

/// Joint state of query register x, answer register y and an |X|-cell
/// database register. Each cell holds a value in [0, |Y|) or the fresh
/// symbol, stored as digit |Y|. In standard mode the database carries actual
/// function tables (no fresh symbol in the support); in compressed mode
/// fresh cells are explicit.
class OracleState {
public:
    using Complex = std::complex<double>;
    using Vector = Eigen::VectorXcd;

    enum class Mode { standard, compressed };

    /// |x=0, y=0> with the database in uniform superposition over all tables.
    static OracleState standard(std::uint32_t domain, std::uint32_t codomain);
    /// |x=0, y=0> with every cell fresh.
    static OracleState compressed(std::uint32_t domain, std::uint32_t codomain);

    std::uint32_t domain() const noexcept { return nx_; }
    std::uint32_t codomain() const noexcept { return ny_; }
    Mode mode() const noexcept { return mode_; }
    std::uint32_t queries() const noexcept { return queries_; }
    std::uint32_t fresh_symbol() const noexcept { return ny_; }

    Vector& amplitudes() noexcept { return amp_; }
    const Vector& amplitudes() const noexcept { return amp_; }
    Eigen::Index dimension() const noexcept { return amp_.size(); }

    double norm() const { return amp_.norm(); }

    struct Basis {
        std::uint32_t x = 0;
        std::uint32_t y = 0;
        std::vector<std::uint8_t> cells; // labels in [0, ny]; ny means fresh
    };
    Basis decode(Eigen::Index index) const;
    Eigen::Index encode(const Basis& basis) const;

    void count_query();

private:
    OracleState(std::uint32_t nx, std::uint32_t ny, Mode mode);
    friend OracleState decompress(const OracleState&);

    std::uint32_t nx_ = 0;
    std::uint32_t ny_ = 0;
    Mode mode_ = Mode::standard;
    std::uint32_t queries_ = 0;
    Vector amp_;
};

/// d-dimensional DFT: |j> -> (1/sqrt(d)) sum_k w^{jk} |k>, w = exp(2*pi*i/d).
Eigen::MatrixXcd dft_matrix(std::uint32_t d);

/// DFT on the answer register / on one database cell (fresh symbol is fixed).
void qft_y(OracleState& state);
void iqft_y(OracleState& state);
void qft_cell(OracleState& state, std::uint32_t cell);
void iqft_cell(OracleState& state, std::uint32_t cell);

/// Standard oracle: |x, y> |D> -> |x, y + D(x) mod |Y|> |D>. Standard mode.
void sto_apply(OracleState& state);

/// Fourier-side oracle: the standard oracle conjugated by the cell DFTs,
/// equivalently the database update D(x) -> D(x) - y read in the Fourier
/// frame of the answer register. Standard mode.
void o_apply(OracleState& state);

/// Per-cell compression: swaps the fresh symbol with the uniform cell state
/// and fixes the other Fourier vectors. A real symmetric involution.
void comp_apply(OracleState& state);
void comp_dagger(OracleState& state);

/// Compressed oracle Comp o O o Comp^dag; with the database held in the value
/// basis the middle factor acts as the standard oracle. Compressed mode.
void co_apply(OracleState& state);

/// Comp applied to a compressed run: fresh cells become uniform, recorded
/// cells stay. Yields the state an identical standard-oracle run produces.
OracleState decompress(const OracleState& state);

/// Per-(x, y) measurement distribution, database traced out.
Eigen::VectorXd adversary_marginal(const OracleState& state);

/// An adversary alternating local unitaries on (x, y) with oracle calls:
/// U_{q+1} cO U_q ... cO U_1. Each unitary is (|X|*|Y|) x (|X|*|Y|).
struct AdversaryCircuit {
    std::uint32_t domain = 2;
    std::uint32_t codomain = 2;
    std::vector<Eigen::MatrixXcd> unitaries;
    std::uint32_t query_count() const noexcept {
        return unitaries.empty() ? 0 : static_cast<std::uint32_t>(unitaries.size()) - 1;
    }
};

enum class OracleKind { standard, compressed };

OracleState run_adversary(const AdversaryCircuit& circuit, OracleKind kind);

/// l2 norm of the projection onto database basis states satisfying the
/// predicate (labels as in Basis::cells). Compressed mode.
double projector_norm(const OracleState& state,
                      const std::function<bool(const std::vector<std::uint8_t>&)>& predicate);

/// Largest number of non-fresh cells over basis states with amplitude above
/// the tolerance.
std::uint32_t max_recorded_cells(const OracleState& state, double tol = 1e-12);

/// One claim list per measured (x, y); all lists must share one length.
using ClaimExtraction =
    std::function<std::vector<std::pair<std::uint32_t, std::uint32_t>>(std::uint32_t x,
                                                                       std::uint32_t y)>;

struct GapReport {
    double p = 0.0;        // claims correct under the standard oracle
    double p_prime = 0.0;  // claims correct against the compressed database
    std::uint64_t claims = 0;
    bool bound_holds = false; // sqrt(p) <= sqrt(p') + sqrt(claims/|Y|)
};

GapReport zhandry_gap_check(const AdversaryCircuit& circuit, const ClaimExtraction& extraction);

/// Haar-distributed unitary from a seeded stream (QR of a complex Ginibre
/// matrix with phase-normalized diagonal).
Eigen::MatrixXcd random_unitary(Eigen::Index dim, Rng& rng);

} // namespace qsc
