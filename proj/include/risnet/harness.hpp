#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "risnet/config.hpp"
#include "risnet/optimizer.hpp"

namespace risnet {

enum class SweptParam { NumUav, NumUe, Gamma0Ris };

const char* swept_param_name(SweptParam p);

struct SweepSpec {
    SweptParam param = SweptParam::NumUav;
    std::vector<double> values; ///< sorted ascending
    int iterations = 500;
    std::vector<Scheme> schemes;
    SimConfig base;
    PhaseMode phase_mode = PhaseMode::Paper;
};

struct SweepRecord {
    Scheme scheme = Scheme::Original;
    SweptParam param = SweptParam::NumUav;
    double swept_value = 0.0;
    double mean_lambda2 = 0.0;
    double std_lambda2 = 0.0; ///< population convention (divide by N)
    int iterations = 0;
    double fraction_noop = 0.0; ///< share of iterations with no candidates
};

struct InstanceResult {
    std::map<Scheme, double> lambda2; ///< achieved connectivity per scheme
    int num_candidates = 0;
    bool noop = false; ///< empty candidate set
};

/// Evaluates every requested scheme on one scenario: the graph is built
/// once and all schemes see the identical candidate list. `original`
/// reports the base connectivity.
InstanceResult run_instance(const Scenario& sc,
                            const std::vector<Scheme>& schemes,
                            PhaseMode mode);

/// Monte Carlo sweep: per (value, iteration) cell a child seed is
/// derived from (spec seed, value index, iteration), so output is
/// deterministic and cells are independent. Records appear for each
/// value in ascending order, schemes in spec order.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

/// CSV with header scheme,swept_parameter,swept_value,mean_lambda2,
/// std_lambda2,iterations,fraction_noop; 9 significant digits.
void emit_csv(const std::vector<SweepRecord>& records, std::ostream& out);
void emit_csv(const std::vector<SweepRecord>& records, const std::string& path);

} // namespace risnet
