// Copyright 2026 The cmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cmap/stabilizer.h"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "cmap/errors.h"

namespace cmap {

namespace {

std::string join(const std::vector<std::string> &items, const char *sep) {
    std::string out;
    for (const auto &s : items) {
        if (!out.empty()) {
            out += sep;
        }
        out += s;
    }
    return out;
}

/// Rank over GF(2) of the symplectic vectors (x | z).
std::size_t symplectic_rank(const std::vector<PauliString> &ps) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
    rows.reserve(ps.size());
    for (const auto &p : ps) {
        rows.emplace_back(p.xs(), p.zs());
    }
    std::size_t rank = 0;
    for (int col = 0; col < 128 && rank < rows.size(); col++) {
        auto has = [&](const std::pair<std::uint64_t, std::uint64_t> &r) {
            return col < 64 ? ((r.first >> col) & 1) : ((r.second >> (col - 64)) & 1);
        };
        std::size_t pivot = rank;
        while (pivot < rows.size() && !has(rows[pivot])) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); r++) {
            if (r != rank && has(rows[r])) {
                rows[r].first ^= rows[rank].first;
                rows[r].second ^= rows[rank].second;
            }
        }
        rank++;
    }
    return rank;
}

/// Candidate t in [0, 4^n) read as n base-4 digits, qubit 0 most significant,
/// so numeric order is the I<X<Y<Z lexicographic order of the letters.
PauliString candidate(std::size_t n, std::uint64_t t) {
    std::uint64_t xs = 0, zs = 0;
    for (std::size_t q = 0; q < n; q++) {
        auto v = (t >> (2 * (n - 1 - q))) & 3;
        xs |= std::uint64_t{v == 1 || v == 2} << q;
        zs |= std::uint64_t{v == 2 || v == 3} << q;
    }
    return PauliString(n, xs, zs, 0);
}

void check_brute_force_size(std::size_t n) {
    if (n > kMaxBruteForceQubits) {
        throw CapabilityError(
            "brute-force search over 4^n strings is limited to n <= " + std::to_string(kMaxBruteForceQubits) +
            " (got n = " + std::to_string(n) + ")");
    }
}

using LetterKey = std::pair<std::uint64_t, std::uint64_t>;

struct LetterKeyHash {
    std::size_t operator()(const LetterKey &k) const noexcept {
        return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ull ^ k.second);
    }
};

std::unordered_set<LetterKey, LetterKeyHash> group_letters(const std::vector<PauliString> &group) {
    std::unordered_set<LetterKey, LetterKeyHash> out;
    for (const auto &s : group) {
        out.emplace(s.xs(), s.zs());
    }
    return out;
}

std::size_t min_nontrivial_weight(const std::vector<PauliString> &group) {
    std::size_t w = std::numeric_limits<std::size_t>::max();
    for (const auto &s : group) {
        if (!s.is_identity_letters()) {
            w = std::min(w, s.weight());
        }
    }
    return w;
}

struct Best {
    std::size_t weight = std::numeric_limits<std::size_t>::max();
    std::uint64_t index = 0;

    void offer(std::size_t w, std::uint64_t t) {
        if (w < weight || (w == weight && t < index)) {
            weight = w;
            index = t;
        }
    }
};

std::vector<PauliString> finish_recovery(std::size_t n, const std::vector<Best> &best) {
    std::vector<PauliString> out;
    out.reserve(best.size());
    for (std::size_t s = 0; s < best.size(); s++) {
        if (best[s].weight == std::numeric_limits<std::size_t>::max()) {
            throw InvalidCodeError("syndrome " + std::to_string(s) + " is unreachable by any Pauli string");
        }
        out.push_back(candidate(n, best[s].index));
    }
    return out;
}

std::int64_t checked_int(const std::string &token, std::size_t line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used != token.size()) {
            throw ParseError("expected an integer, got '" + token + "'", line);
        }
        return v;
    } catch (const std::logic_error &) {
        throw ParseError("expected an integer, got '" + token + "'", line);
    }
}

}  // namespace

ValidationReport validate(const CodeDefinition &def) {
    ValidationReport report;
    auto &v = report.violations;
    const std::size_t n = def.num_qubits;
    const std::size_t m = def.generators.size();
    if (n == 0) {
        v.push_back("qubit count must be positive");
        return report;
    }
    if (m + 1 != n) {
        v.push_back(
            "expected m = n - 1 = " + std::to_string(n - 1) + " generators for a k = 1 code, got " + std::to_string(m));
    }
    bool sizes_ok = true;
    auto check_size = [&](const PauliString &p, const std::string &what) {
        if (p.num_qubits() != n) {
            v.push_back(what + " " + p.str() + " has length " + std::to_string(p.num_qubits()) + ", expected " +
                        std::to_string(n));
            sizes_ok = false;
        }
    };
    for (std::size_t i = 0; i < m; i++) {
        check_size(def.generators[i], "generator " + std::to_string(i));
    }
    check_size(def.logical_x, "logicalX");
    check_size(def.logical_z, "logicalZ");
    for (std::size_t j = 0; j < def.recovery.size(); j++) {
        check_size(def.recovery[j], "recovery " + std::to_string(j));
    }
    if (!sizes_ok) {
        return report;
    }

    bool group_ok = true;
    for (std::size_t i = 0; i < m; i++) {
        if (!def.generators[i].is_hermitian()) {
            v.push_back("generator " + std::to_string(i) + " (" + def.generators[i].str() + ") is not hermitian");
            group_ok = false;
        }
        for (std::size_t j = i + 1; j < m; j++) {
            if (eta(def.generators[i], def.generators[j]) != +1) {
                v.push_back(
                    "generators " + std::to_string(i) + " (" + def.generators[i].str() + ") and " + std::to_string(j) +
                    " (" + def.generators[j].str() + ") anticommute");
                group_ok = false;
            }
        }
    }
    if (symplectic_rank(def.generators) != m) {
        v.push_back("generators are not independent");
        group_ok = false;
    }
    if (group_ok && m < 63) {
        try {
            enumerate_group(n, def.generators);
        } catch (const InvalidCodeError &e) {
            v.push_back(e.what());
        }
    }

    auto check_logical = [&](const PauliString &l, const char *what) {
        if (!l.is_hermitian()) {
            v.push_back(std::string(what) + " is not hermitian");
        }
        if (l.is_identity_letters()) {
            v.push_back(std::string(what) + " is the identity");
        }
        for (std::size_t i = 0; i < m; i++) {
            if (eta(l, def.generators[i]) != +1) {
                v.push_back(std::string(what) + " anticommutes with generator " + std::to_string(i));
            }
        }
    };
    check_logical(def.logical_x, "logicalX");
    check_logical(def.logical_z, "logicalZ");
    if (eta(def.logical_x, def.logical_z) != -1) {
        v.push_back("logicalX and logicalZ must anticommute");
    }

    if (!def.recovery.empty() && m < 63) {
        std::size_t expected = std::size_t{1} << m;
        if (def.recovery.size() != expected) {
            v.push_back(
                "expected " + std::to_string(expected) + " recovery operators, got " +
                std::to_string(def.recovery.size()));
        }
        std::map<std::uint64_t, std::size_t> seen;
        for (std::size_t j = 0; j < def.recovery.size(); j++) {
            auto s = syndrome(def.recovery[j], def.generators).bits;
            auto [it, inserted] = seen.emplace(s, j);
            if (!inserted) {
                v.push_back(
                    "recovery operators " + std::to_string(it->second) + " and " + std::to_string(j) +
                    " share syndrome " + std::to_string(s));
            }
        }
        if (def.recovery.size() == expected) {
            for (std::uint64_t s = 0; s < expected; s++) {
                if (!seen.contains(s)) {
                    v.push_back("no recovery operator for syndrome " + std::to_string(s));
                }
            }
        }
    }
    return report;
}

StabilizerCode StabilizerCode::build(CodeDefinition def) {
    auto report = validate(def);
    if (!report.ok()) {
        throw InvalidCodeError("invalid stabilizer code '" + def.name + "': " + join(report.violations, "; "));
    }
    StabilizerCode code;
    code.name_ = std::move(def.name);
    code.n_ = def.num_qubits;
    code.generators_ = std::move(def.generators);
    code.logical_x_ = def.logical_x;
    code.logical_z_ = def.logical_z;
    code.logical_y_ = (def.logical_x * def.logical_z).with_phase(
        static_cast<std::uint8_t>((def.logical_x * def.logical_z).phase() + 1));
    code.identity_ = PauliString(code.n_);
    code.group_ = enumerate_group(code.n_, code.generators_);

    if (def.recovery.empty()) {
        code.recovery_ = auto_recovery(code.n_, code.generators_);
    } else {
        code.recovery_.resize(def.recovery.size());
        for (auto &r : def.recovery) {
            code.recovery_[syndrome(r, code.generators_).bits] = r;
        }
    }
    if (code.n_ <= kMaxBruteForceQubits) {
        auto dw = distance_and_w(code.n_, code.generators_);
        code.distance_ = dw.distance;
        code.w_ = dw.w;
    }
    return code;
}

const PauliString &StabilizerCode::logical(PauliLetter sigma) const {
    switch (sigma) {
        case PauliLetter::X:
            return logical_x_;
        case PauliLetter::Y:
            return logical_y_;
        case PauliLetter::Z:
            return logical_z_;
        default:
            return identity_;
    }
}

std::vector<PauliString> enumerate_group(std::size_t num_qubits, const std::vector<PauliString> &generators) {
    const std::size_t m = generators.size();
    if (m >= 63) {
        throw CapabilityError("stabilizer group too large to enumerate");
    }
    std::vector<PauliString> out(std::size_t{1} << m, PauliString(num_qubits));
    for (std::size_t mask = 1; mask < out.size(); mask++) {
        // Extend the subset without its highest generator by that generator.
        std::size_t hi = 63 - static_cast<std::size_t>(std::countl_zero(static_cast<std::uint64_t>(mask)));
        out[mask] = out[mask & ~(std::size_t{1} << hi)] * generators[hi];
        if (out[mask].is_identity_letters()) {
            throw InvalidCodeError("a nonempty product of generators equals " + out[mask].str());
        }
        if (!out[mask].is_hermitian()) {
            throw InvalidCodeError("stabilizer element " + out[mask].str() + " is not hermitian");
        }
    }
    return out;
}

std::vector<PauliString> enumerate_group(const StabilizerCode &code) {
    return enumerate_group(code.num_qubits(), code.generators());
}

SyndromeIndex syndrome(const PauliString &p, const std::vector<PauliString> &generators) {
    SyndromeIndex s;
    for (std::size_t i = 0; i < generators.size(); i++) {
        if (eta(p, generators[i]) == -1) {
            s.bits |= std::uint64_t{1} << i;
        }
    }
    return s;
}

SyndromeIndex syndrome(const PauliString &p, const StabilizerCode &code) {
    return syndrome(p, code.generators());
}

FMatrix f_function(const StabilizerCode &code) {
    const auto &group = code.group();
    const auto &recovery = code.recovery();
    FMatrix f(group.size());
    for (std::size_t i = 0; i < group.size(); i++) {
        for (auto sigma : kAllLetters) {
            const auto &bar = code.logical(sigma);
            std::int64_t acc = 0;
            for (const auto &r : recovery) {
                acc += eta(r, group[i]) * eta(r, bar);
            }
            f[i][static_cast<int>(sigma)] = acc;
        }
    }
    return f;
}

DecodingCoefficients decoding_coefficients(const StabilizerCode &code) {
    auto f = f_function(code);
    const auto &group = code.group();
    const auto size = static_cast<std::int64_t>(group.size());
    DecodingCoefficients out;
    for (auto sigma : kAllLetters) {
        auto &entries = out[static_cast<int>(sigma)];
        entries.reserve(group.size());
        for (std::size_t i = 0; i < group.size(); i++) {
            auto product = group[i] * code.logical(sigma);
            if (!product.is_hermitian()) {
                throw InvalidCodeError("S_i * logical is not hermitian: " + product.str());
            }
            int alpha = product.sign();
            entries.push_back({product.stripped(), alpha, Rational(f[i][static_cast<int>(sigma)] * alpha, size)});
        }
    }
    return out;
}

DistanceAndW distance_and_w(std::size_t n, const std::vector<PauliString> &generators) {
    check_brute_force_size(n);
    auto group = enumerate_group(n, generators);
    auto members = group_letters(group);
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    std::size_t d = std::numeric_limits<std::size_t>::max();

#pragma omp parallel for schedule(static) reduction(min : d)
    for (std::uint64_t t = 1; t < total; t++) {
        auto p = candidate(n, t);
        auto wt = p.weight();
        if (wt >= d) {
            continue;
        }
        if (syndrome(p, generators).bits != 0) {
            continue;
        }
        if (members.contains({p.xs(), p.zs()})) {
            continue;
        }
        d = wt;
    }
    return {d, min_nontrivial_weight(group)};
}

DistanceAndW distance_and_w(const StabilizerCode &code) {
    return distance_and_w(code.num_qubits(), code.generators());
}

DistanceAndW distance_and_w_reference(std::size_t n, const std::vector<PauliString> &generators) {
    check_brute_force_size(n);
    auto group = enumerate_group(n, generators);
    auto members = group_letters(group);
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    std::size_t d = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t t = 1; t < total; t++) {
        auto p = candidate(n, t);
        if (syndrome(p, generators).bits == 0 && !members.contains({p.xs(), p.zs()})) {
            d = std::min(d, p.weight());
        }
    }
    return {d, min_nontrivial_weight(group)};
}

std::vector<PauliString> auto_recovery(std::size_t n, const std::vector<PauliString> &generators) {
    check_brute_force_size(n);
    const std::size_t syndromes = std::size_t{1} << generators.size();
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    std::vector<Best> best(syndromes);
    std::mutex merge;

#pragma omp parallel
    {
        std::vector<Best> local(syndromes);
#pragma omp for schedule(static)
        for (std::uint64_t t = 0; t < total; t++) {
            auto p = candidate(n, t);
            local[syndrome(p, generators).bits].offer(p.weight(), t);
        }
        std::lock_guard<std::mutex> lock(merge);
        for (std::size_t s = 0; s < syndromes; s++) {
            best[s].offer(local[s].weight, local[s].index);
        }
    }
    return finish_recovery(n, best);
}

std::vector<PauliString> auto_recovery_reference(std::size_t n, const std::vector<PauliString> &generators) {
    check_brute_force_size(n);
    const std::size_t syndromes = std::size_t{1} << generators.size();
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    std::vector<Best> best(syndromes);
    for (std::uint64_t t = 0; t < total; t++) {
        auto p = candidate(n, t);
        best[syndrome(p, generators).bits].offer(p.weight(), t);
    }
    return finish_recovery(n, best);
}

CodeDefinition parse_code_spec(std::string_view text, std::string name) {
    CodeDefinition def;
    def.name = std::move(name);
    std::optional<std::size_t> n;
    bool have_x = false, have_z = false, have_recovery = false, recovery_auto = false;
    std::size_t line_no = 0;

    auto parse_pauli = [&](const std::string &token) {
        PauliString p;
        try {
            p = PauliString::from_str(token);
        } catch (const std::exception &e) {
            throw ParseError(e.what(), line_no);
        }
        if (!n) {
            throw ParseError("'n' must be given before any Pauli string", line_no);
        }
        if (p.num_qubits() != *n) {
            throw ParseError(
                "Pauli string '" + token + "' has " + std::to_string(p.num_qubits()) + " letters, expected " +
                    std::to_string(*n),
                line_no);
        }
        return p;
    };

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        line_no++;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.resize(hash);
        }
        std::istringstream words(raw);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;) {
            tokens.push_back(w);
        }
        if (tokens.empty()) {
            continue;
        }
        const auto &key = tokens[0];
        if (tokens.size() != 2) {
            throw ParseError("expected '" + key + " <value>'", line_no);
        }
        const auto &value = tokens[1];
        if (key == "n") {
            if (n) {
                throw ParseError("duplicate 'n'", line_no);
            }
            auto v = checked_int(value, line_no);
            if (v < 1 || v > static_cast<std::int64_t>(PauliString::kMaxQubits)) {
                throw ParseError("qubit count out of range: " + value, line_no);
            }
            n = static_cast<std::size_t>(v);
            def.num_qubits = *n;
        } else if (key == "generator") {
            def.generators.push_back(parse_pauli(value));
        } else if (key == "logicalX") {
            if (have_x) {
                throw ParseError("duplicate 'logicalX'", line_no);
            }
            def.logical_x = parse_pauli(value);
            have_x = true;
        } else if (key == "logicalZ") {
            if (have_z) {
                throw ParseError("duplicate 'logicalZ'", line_no);
            }
            def.logical_z = parse_pauli(value);
            have_z = true;
        } else if (key == "recovery") {
            if (value == "auto") {
                if (have_recovery) {
                    throw ParseError("'recovery auto' cannot be mixed with explicit recovery operators", line_no);
                }
                recovery_auto = true;
            } else {
                if (recovery_auto) {
                    throw ParseError("'recovery auto' cannot be mixed with explicit recovery operators", line_no);
                }
                def.recovery.push_back(parse_pauli(value));
            }
            have_recovery = true;
        } else {
            throw ParseError("unknown keyword '" + key + "'", line_no);
        }
    }
    const std::size_t end = line_no + 1;
    if (!n) {
        throw ParseError("missing 'n'", end);
    }
    if (!have_x) {
        throw ParseError("missing 'logicalX'", end);
    }
    if (!have_z) {
        throw ParseError("missing 'logicalZ'", end);
    }
    if (!have_recovery) {
        throw ParseError("missing recovery operators (list them or write 'recovery auto')", end);
    }
    return def;
}

CodeDefinition load_code_spec(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot read code spec file '" + path.string() + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_code_spec(buf.str(), path.stem().string());
}

std::string format_code_spec(const StabilizerCode &code) {
    std::ostringstream out;
    out << "# " << code.name() << "\n";
    out << "n " << code.num_qubits() << "\n";
    for (const auto &g : code.generators()) {
        out << "generator " << g << "\n";
    }
    out << "logicalX " << code.logical_x() << "\n";
    out << "logicalZ " << code.logical_z() << "\n";
    for (const auto &r : code.recovery()) {
        out << "recovery " << r << "\n";
    }
    return out.str();
}

namespace {

std::vector<PauliString> parse_all(std::initializer_list<const char *> texts) {
    std::vector<PauliString> out;
    for (auto t : texts) {
        out.push_back(PauliString::from_str(t));
    }
    return out;
}

std::vector<PauliString> products(const std::vector<std::vector<PauliString>> &factors) {
    std::vector<PauliString> out{PauliString(factors.front().front().num_qubits())};
    for (const auto &set : factors) {
        std::vector<PauliString> next;
        for (const auto &a : out) {
            for (const auto &b : set) {
                next.push_back((a * b).stripped());
            }
        }
        out = std::move(next);
    }
    return out;
}

CodeDefinition five_qubit() {
    CodeDefinition def{"five-qubit", 5, parse_all({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}),
                       PauliString::from_str("XXXXX"), PauliString::from_str("ZZZZZ"), {}};
    def.recovery.push_back(PauliString(5));
    for (std::size_t q = 0; q < 5; q++) {
        for (auto l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
            def.recovery.push_back(PauliString::single(5, q, l));
        }
    }
    return def;
}

CodeDefinition steane() {
    CodeDefinition def{"steane", 7,
                       parse_all({"IIIXXXX", "IXXIIXX", "XIXIXIX", "IIIZZZZ", "IZZIIZZ", "ZIZIZIZ"}),
                       PauliString::from_str("XXXXXXX"), PauliString::from_str("ZZZZZZZ"), {}};
    std::vector<PauliString> xs{PauliString(7)}, zs{PauliString(7)};
    for (std::size_t q = 0; q < 7; q++) {
        xs.push_back(PauliString::single(7, q, PauliLetter::X));
        zs.push_back(PauliString::single(7, q, PauliLetter::Z));
    }
    // X_i Z_i is proportional to Y_i; phases are dropped.
    def.recovery = products({xs, zs});
    return def;
}

CodeDefinition shor() {
    CodeDefinition def{"shor", 9,
                       parse_all({"ZZIIIIIII", "IZZIIIIII", "IIIZZIIII", "IIIIZZIII", "IIIIIIZZI", "IIIIIIIZZ",
                                  "XXXXXXIII", "IIIXXXXXX"}),
                       PauliString::from_str("XXXXXXXXX"), PauliString::from_str("ZZZZZZZZZ"), {}};
    auto block_x = [](std::size_t b) {
        std::vector<PauliString> s{PauliString(9)};
        for (std::size_t q = 3 * b; q < 3 * b + 3; q++) {
            s.push_back(PauliString::single(9, q, PauliLetter::X));
        }
        return s;
    };
    def.recovery = products(
        {block_x(0), block_x(1), block_x(2), parse_all({"IIIIIIIII", "ZZZIIIIII", "IIIZZZIII", "IIIIIIZZZ"})});
    return def;
}

CodeDefinition bitflip3() {
    return CodeDefinition{"bitflip3", 3, parse_all({"ZZI", "IZZ"}), PauliString::from_str("XXX"),
                          PauliString::from_str("ZZZ"), parse_all({"III", "XII", "IXI", "IIX"})};
}

}  // namespace

const std::vector<std::string> &builtin_code_names() {
    static const std::vector<std::string> names{"five-qubit", "steane", "shor", "bitflip3"};
    return names;
}

CodeDefinition builtin_code_definition(std::string_view name) {
    if (name == "five-qubit") {
        return five_qubit();
    }
    if (name == "steane") {
        return steane();
    }
    if (name == "shor") {
        return shor();
    }
    if (name == "bitflip3") {
        return bitflip3();
    }
    throw std::invalid_argument("unknown built-in code '" + std::string(name) + "'");
}

const StabilizerCode &builtin_code(std::string_view name) {
    static const std::map<std::string, StabilizerCode, std::less<>> codes = [] {
        std::map<std::string, StabilizerCode, std::less<>> out;
        for (const auto &n : builtin_code_names()) {
            out.emplace(n, StabilizerCode::build(builtin_code_definition(n)));
        }
        return out;
    }();
    auto it = codes.find(name);
    if (it == codes.end()) {
        throw std::invalid_argument("unknown built-in code '" + std::string(name) + "'");
    }
    return it->second;
}

StabilizerCode resolve_code(std::string_view source) {
    const auto &names = builtin_code_names();
    if (std::find(names.begin(), names.end(), source) != names.end()) {
        return builtin_code(source);
    }
    return StabilizerCode::build(load_code_spec(std::filesystem::path(source)));
}

}  // namespace cmap
