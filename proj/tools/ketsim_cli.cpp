// Copyright 2026 The ketsim Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * The ketsim command line: `factor` runs Shor's algorithm end to end, `qft`
 * evaluates the quantum Fourier transform on a basis ket or a state file,
 * `order` performs one quantum order-finding run, and `gates` prints the QFT
 * circuit decomposition.
 *
 * Every command accepts --json to emit a single envelope
 * {"command", "inputs", "seed", "result", "traces"?} on standard output;
 * without --json a plain-text report is printed instead. Diagnostics go to
 * standard error. Exit codes: 0 success, 1 usage or validation error,
 * 2 attempts exhausted without a factor.
 */

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <ketsim/ketsim.hpp>
#include <ketsim/state_io.hpp>

namespace {

using nlohmann::ordered_json;

// Entropy-backed default so every run is replayable from its echoed seed.
std::uint64_t entropy_seed() {
    std::random_device device;
    return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

template <typename T> ordered_json opt_json(const std::optional<T> &value) {
    if (value) {
        return ordered_json(*value);
    }
    return ordered_json(nullptr);
}

ordered_json pair_json(const std::optional<std::pair<std::uint64_t, std::uint64_t>> &pair) {
    if (pair) {
        return ordered_json::array({pair->first, pair->second});
    }
    return ordered_json(nullptr);
}

std::string list_text(const std::vector<std::uint64_t> &values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += std::to_string(values[i]);
    }
    out += "]";
    return out;
}

void emit(const ordered_json &envelope) { std::cout << envelope.dump(2) << '\n'; }

struct FactorOptions {
    std::uint64_t n = 0;
    std::optional<int> qubits;
    std::optional<int> attempts;
    std::optional<std::uint64_t> seed;
    bool json = false;
};

int run_factor(const FactorOptions &opt) {
    const std::uint64_t seed = opt.seed.value_or(entropy_seed());
    ketsim::ShorConfig config;
    config.qubits_override = opt.qubits;
    config.max_attempts_override = opt.attempts;
    config.seed = seed;
    const ketsim::ShorResult result = ketsim::shor_factor(opt.n, config);

    if (opt.json) {
        ordered_json inputs;
        inputs["n"] = opt.n;
        inputs["qubits"] = opt_json(opt.qubits);
        inputs["attempts"] = opt_json(opt.attempts);
        ordered_json payload;
        payload["qubits"] = result.qubits;
        payload["max_attempts"] = result.max_attempts;
        payload["attempts_used"] = result.traces.size();
        payload["factors"] = pair_json(result.factors);
        ordered_json traces = ordered_json::array();
        for (std::size_t i = 0; i < result.traces.size(); ++i) {
            const ketsim::ShorTrace &trace = result.traces[i];
            ordered_json entry;
            entry["attempt"] = i + 1;
            entry["x"] = trace.chosen_x;
            entry["gcd_shortcut"] = opt_json(trace.gcd_shortcut);
            entry["measured_k"] = opt_json(trace.measured_k);
            entry["denominators"] = trace.convergent_denominators;
            entry["accepted_r"] = opt_json(trace.accepted_r);
            entry["factors"] = pair_json(trace.factors);
            entry["failure_reason"] =
                trace.failure_reason
                    ? ordered_json(std::string(ketsim::to_string(*trace.failure_reason)))
                    : ordered_json(nullptr);
            traces.push_back(std::move(entry));
        }
        ordered_json envelope;
        envelope["command"] = "factor";
        envelope["inputs"] = std::move(inputs);
        envelope["seed"] = seed;
        envelope["result"] = std::move(payload);
        envelope["traces"] = std::move(traces);
        emit(envelope);
    } else {
        std::cout << "factor N = " << opt.n << ": qubits = " << result.qubits
                  << ", max attempts = " << result.max_attempts << ", seed = " << seed
                  << '\n';
        for (std::size_t i = 0; i < result.traces.size(); ++i) {
            const ketsim::ShorTrace &trace = result.traces[i];
            std::cout << "attempt " << i + 1 << ": x = " << trace.chosen_x;
            if (trace.gcd_shortcut) {
                std::cout << ", gcd(" << trace.chosen_x << ", " << opt.n
                          << ") = " << *trace.gcd_shortcut << " is already a factor";
            } else {
                std::cout << ", k = " << *trace.measured_k << ", denominators "
                          << list_text(trace.convergent_denominators);
                if (trace.accepted_r) {
                    std::cout << ", r = " << *trace.accepted_r;
                }
            }
            if (trace.factors) {
                std::cout << ", factors " << trace.factors->first << " x "
                          << trace.factors->second;
            } else {
                std::cout << ", no factors ("
                          << ketsim::to_string(*trace.failure_reason) << ")";
            }
            std::cout << '\n';
        }
        if (result.factors) {
            std::cout << opt.n << " = " << result.factors->first << " x "
                      << result.factors->second << '\n';
        } else {
            std::cout << "no factors found after " << result.traces.size()
                      << " attempts\n";
        }
    }
    return result.factors ? 0 : 2;
}

struct QftOptions {
    std::optional<int> qubits;
    std::optional<std::uint64_t> basis;
    std::string state_file;
    std::string method = "circuit";
    bool json = false;
};

int run_qft(const QftOptions &opt) {
    const bool have_basis = opt.basis.has_value();
    const bool have_file = !opt.state_file.empty();
    if (have_basis == have_file) {
        throw std::invalid_argument("qft: exactly one of --basis or --state-file is required");
    }
    if (!have_basis && opt.method != "circuit") {
        throw std::invalid_argument("qft: --method " + opt.method +
                                    " evaluates a closed form on a basis ket; it requires "
                                    "--basis");
    }

    int qubits = 0;
    ketsim::StateVector input(1);
    if (have_basis) {
        if (!opt.qubits) {
            throw std::invalid_argument("qft: --qubits is required with --basis");
        }
        qubits = *opt.qubits;
        if (qubits < 1 || qubits > ketsim::max_width) {
            throw std::invalid_argument("qft: --qubits must be between 1 and " +
                                        std::to_string(ketsim::max_width));
        }
        if ((*opt.basis >> qubits) != 0) {
            throw std::invalid_argument("qft: basis index " + std::to_string(*opt.basis) +
                                        " does not fit in " + std::to_string(qubits) +
                                        " qubits");
        }
        input = ketsim::basis_ket(qubits, *opt.basis);
    } else {
        input = ketsim::load_state_file(opt.state_file);
        qubits = input.width();
        if (opt.qubits && *opt.qubits != qubits) {
            throw std::invalid_argument("qft: --qubits " + std::to_string(*opt.qubits) +
                                        " disagrees with the state-file width " +
                                        std::to_string(qubits));
        }
        const double input_norm = ketsim::norm(input);
        if (std::abs(input_norm - 1.0) > 1e-6) {
            throw std::invalid_argument("qft: input state has norm " +
                                        ketsim::format_number(input_norm) +
                                        "; expected 1 within 1e-6");
        }
    }

    ketsim::StateVector output(qubits);
    if (opt.method == "circuit") {
        output = ketsim::run_circuit(ketsim::build_qft_circuit(qubits), input);
    } else if (opt.method == "direct") {
        output = ketsim::qft_direct(*opt.basis, qubits);
    } else {
        output = ketsim::qft_product_form(*opt.basis, qubits);
    }

    if (opt.json) {
        ordered_json inputs;
        inputs["qubits"] = opt_json(opt.qubits);
        inputs["basis"] = opt_json(opt.basis);
        inputs["state_file"] = have_file ? ordered_json(opt.state_file) : ordered_json(nullptr);
        inputs["method"] = opt.method;
        ordered_json terms = ordered_json::array();
        for (const auto &[index, amp] : output.terms()) {
            const ketsim::BasisState basis(qubits, index);
            ordered_json term;
            term["basis"] = basis.to_string();
            term["re"] = ketsim::round_for_output(amp.real());
            term["im"] = ketsim::round_for_output(amp.imag());
            term["probability"] = ketsim::round_for_output(std::norm(amp));
            terms.push_back(std::move(term));
        }
        ordered_json payload;
        payload["qubits"] = qubits;
        payload["method"] = opt.method;
        payload["terms"] = std::move(terms);
        ordered_json envelope;
        envelope["command"] = "qft";
        envelope["inputs"] = std::move(inputs);
        envelope["seed"] = nullptr;
        envelope["result"] = std::move(payload);
        emit(envelope);
    } else {
        for (const auto &[index, amp] : output.terms()) {
            const ketsim::BasisState basis(qubits, index);
            std::cout << basis.to_string() << "  " << ketsim::format_number(amp.real())
                      << "  " << ketsim::format_number(amp.imag()) << "  "
                      << ketsim::format_number(std::norm(amp)) << '\n';
        }
    }
    return 0;
}

struct OrderOptions {
    std::uint64_t n = 0;
    std::uint64_t x = 0;
    std::optional<int> qubits;
    std::optional<std::uint64_t> seed;
    bool json = false;
};

int run_order(const OrderOptions &opt) {
    if (opt.n < 2) {
        throw std::invalid_argument("order: N must be at least 2");
    }
    if (opt.x < 1 || opt.x >= opt.n) {
        throw std::invalid_argument("order: x must lie in 1..N-1");
    }
    const std::uint64_t shared = ketsim::gcd(opt.x, opt.n);
    if (shared != 1) {
        std::cerr << "error: gcd(" << opt.x << ", " << opt.n << ") = " << shared
                  << " is already a factor of " << opt.n
                  << "; order finding requires gcd(x, N) = 1\n";
        return 1;
    }
    const int qubits = opt.qubits.value_or(ketsim::default_qubits(opt.n));
    const std::uint64_t seed = opt.seed.value_or(entropy_seed());
    ketsim::RandomStream rng(seed);
    const std::uint64_t k = ketsim::order_find_quantum(opt.n, opt.x, qubits, rng);
    const std::vector<std::uint64_t> denominators =
        ketsim::convergent_denominators(k, qubits);
    std::optional<std::uint64_t> candidate_r;
    for (const std::uint64_t d : denominators) {
        if (d != 0 && ketsim::mod_pow(opt.x, d, opt.n) == 1) {
            candidate_r = d;
            break;
        }
    }
    const std::uint64_t reference = ketsim::brute_force_order(opt.x, opt.n);

    if (opt.json) {
        ordered_json inputs;
        inputs["n"] = opt.n;
        inputs["x"] = opt.x;
        inputs["qubits"] = opt_json(opt.qubits);
        ordered_json payload;
        payload["qubits"] = qubits;
        payload["measured_k"] = k;
        payload["denominators"] = denominators;
        payload["candidate_r"] = opt_json(candidate_r);
        payload["brute_force_order"] = reference;
        ordered_json envelope;
        envelope["command"] = "order";
        envelope["inputs"] = std::move(inputs);
        envelope["seed"] = seed;
        envelope["result"] = std::move(payload);
        emit(envelope);
    } else {
        std::cout << "order N = " << opt.n << ", x = " << opt.x << ": qubits = " << qubits
                  << ", seed = " << seed << '\n';
        std::cout << "measured k = " << k << '\n';
        std::cout << "denominators " << list_text(denominators) << '\n';
        if (candidate_r) {
            std::cout << "candidate r = " << *candidate_r << '\n';
        } else {
            std::cout << "candidate r = none\n";
        }
        std::cout << "brute-force order = " << reference << '\n';
    }
    return 0;
}

struct GatesOptions {
    int qubits = 0;
    bool json = false;
};

int run_gates(const GatesOptions &opt) {
    if (opt.qubits < 1) {
        throw std::invalid_argument("gates: --qubits must be at least 1");
    }
    const ketsim::Circuit circuit = ketsim::build_qft_circuit(opt.qubits);
    const ketsim::GateCounts counts = ketsim::gate_counts(opt.qubits);

    if (opt.json) {
        ordered_json steps = ordered_json::array();
        for (const ketsim::GateApplication &step : circuit.steps) {
            steps.push_back(ketsim::to_text(step));
        }
        ordered_json payload;
        payload["qubits"] = opt.qubits;
        payload["steps"] = std::move(steps);
        payload["counts"] = {{"h_and_r", counts.h_and_r}, {"swaps", counts.swaps}};
        ordered_json envelope;
        envelope["command"] = "gates";
        envelope["inputs"] = ordered_json{{"qubits", opt.qubits}};
        envelope["seed"] = nullptr;
        envelope["result"] = std::move(payload);
        emit(envelope);
    } else {
        std::cout << ketsim::circuit_text(circuit);
        std::cout << "counts: h_and_r = " << counts.h_and_r << ", swaps = " << counts.swaps
                  << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"ketsim: sparse state-vector simulation of the quantum Fourier "
                 "transform and Shor's factoring algorithm"};
    app.require_subcommand(1);

    FactorOptions fopt;
    std::uint64_t factor_seed = 0;
    int factor_qubits = 0;
    int factor_attempts = 0;
    CLI::App *factor = app.add_subcommand("factor", "Factor an odd composite integer");
    factor->add_option("N", fopt.n, "integer to factor")->required();
    CLI::Option *factor_seed_opt =
        factor->add_option("--seed", factor_seed, "random seed (default: system entropy)");
    CLI::Option *factor_qubits_opt =
        factor->add_option("--qubits", factor_qubits, "first-register width in qubits");
    CLI::Option *factor_attempts_opt =
        factor->add_option("--attempts", factor_attempts, "maximum number of attempts");
    factor->add_flag("--json", fopt.json, "emit a JSON envelope");

    QftOptions qopt;
    int qft_qubits = 0;
    std::uint64_t qft_basis = 0;
    CLI::App *qft = app.add_subcommand("qft", "Apply the quantum Fourier transform");
    CLI::Option *qft_qubits_opt = qft->add_option("--qubits", qft_qubits, "register width");
    CLI::Option *qft_basis_opt =
        qft->add_option("--basis", qft_basis, "basis index to transform");
    qft->add_option("--state-file", qopt.state_file, "JSON state file to transform");
    qft->add_option("--method", qopt.method, "circuit | direct | product")
        ->check(CLI::IsMember({"circuit", "direct", "product"}));
    qft->add_flag("--json", qopt.json, "emit a JSON envelope");

    OrderOptions oopt;
    std::uint64_t order_seed = 0;
    int order_qubits = 0;
    CLI::App *order = app.add_subcommand("order", "One quantum order-finding run");
    order->add_option("N", oopt.n, "modulus")->required();
    order->add_option("x", oopt.x, "base whose order is sought")->required();
    CLI::Option *order_seed_opt =
        order->add_option("--seed", order_seed, "random seed (default: system entropy)");
    CLI::Option *order_qubits_opt =
        order->add_option("--qubits", order_qubits, "first-register width in qubits");
    order->add_flag("--json", oopt.json, "emit a JSON envelope");

    GatesOptions gopt;
    CLI::App *gates = app.add_subcommand("gates", "Print the QFT circuit decomposition");
    gates->add_option("--qubits", gopt.qubits, "register width")->required();
    gates->add_flag("--json", gopt.json, "emit a JSON envelope");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (factor->parsed()) {
            if (factor_seed_opt->count() > 0) {
                fopt.seed = factor_seed;
            }
            if (factor_qubits_opt->count() > 0) {
                fopt.qubits = factor_qubits;
            }
            if (factor_attempts_opt->count() > 0) {
                fopt.attempts = factor_attempts;
            }
            return run_factor(fopt);
        }
        if (qft->parsed()) {
            if (qft_qubits_opt->count() > 0) {
                qopt.qubits = qft_qubits;
            }
            if (qft_basis_opt->count() > 0) {
                qopt.basis = qft_basis;
            }
            return run_qft(qopt);
        }
        if (order->parsed()) {
            if (order_seed_opt->count() > 0) {
                oopt.seed = order_seed;
            }
            if (order_qubits_opt->count() > 0) {
                oopt.qubits = order_qubits;
            }
            return run_order(oopt);
        }
        if (gates->parsed()) {
            return run_gates(gopt);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
