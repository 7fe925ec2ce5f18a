// Copyright 2026 The zxparam Authors
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

#include "zxparam/circuit.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

namespace zxparam {

std::vector<std::size_t> Circuit::param_gate_index() const {
    std::vector<std::size_t> out(param_names.size(), 0);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (gates[i].kind == GateKind::RzParam) {
            out.at(static_cast<std::size_t>(gates[i].param)) = i;
        }
    }
    return out;
}

namespace {

struct Token {
    std::string text;
    int column = 0;
};

bool is_ident(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    for (char ch : s) {
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) {
            return false;
        }
    }
    return true;
}

// Parses a Clifford angle; returns nullopt if `s` does not look like a number at all.
// Sets `clifford` false when it is numeric but not a multiple of pi/2.
std::optional<int> parse_angle(std::string s, bool& clifford) {
    clifford = true;
    std::erase(s, ' ');
    std::erase(s, '*');
    if (s.empty()) {
        return std::nullopt;
    }
    double sign = 1.0;
    std::size_t pos = 0;
    if (s[pos] == '-' || s[pos] == '+') {
        sign = s[pos] == '-' ? -1.0 : 1.0;
        ++pos;
    }
    double num = 1.0;
    std::size_t num_end = pos;
    while (num_end < s.size() && (std::isdigit(static_cast<unsigned char>(s[num_end])) || s[num_end] == '.')) {
        ++num_end;
    }
    if (num_end > pos) {
        auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + num_end, num);
        if (ec != std::errc() || ptr != s.data() + num_end) {
            return std::nullopt;
        }
    }
    const bool has_number = num_end > pos;
    std::string rest = s.substr(num_end);
    double den = 1.0;
    bool has_pi = false;
    if (rest.rfind("pi", 0) == 0) {
        has_pi = true;
        rest = rest.substr(2);
        if (!rest.empty()) {
            if (rest[0] != '/') {
                return std::nullopt;
            }
            rest = rest.substr(1);
            int d = 0;
            auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
            if (ec != std::errc() || ptr != rest.data() + rest.size() || d <= 0) {
                return std::nullopt;
            }
            den = d;
        }
    } else if (!rest.empty() || !has_number) {
        return std::nullopt;
    }
    if (!has_pi) {
        if (num == 0.0) {
            return 0;
        }
        clifford = false;
        return 0;
    }
    // Angle in units of pi/2.
    const double units = sign * num * 2.0 / den;
    const double rounded = std::round(units);
    if (std::abs(units - rounded) > 1e-12) {
        clifford = false;
        return 0;
    }
    return mod4(static_cast<int>(std::fmod(rounded, 4.0)));
}

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        Token t;
        t.column = static_cast<int>(i) + 1;
        int depth = 0;
        while (i < line.size() && (depth > 0 || !std::isspace(static_cast<unsigned char>(line[i])))) {
            if (line[i] == '(') {
                ++depth;
            } else if (line[i] == ')') {
                --depth;
            }
            t.text += line[i];
            ++i;
        }
        out.push_back(std::move(t));
    }
    return out;
}

int parse_int(const Token& t, int line) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw SyntaxError(line, t.column, "expected an integer, got '" + t.text + "'");
    }
    return v;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit c;
    bool have_qreg = false;
    std::map<std::string, ParamId> names;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        if (!raw.empty() && raw.back() == '\r') {
            raw.pop_back();
        }
        std::vector<Token> toks = tokenize(raw);
        if (toks.empty()) {
            continue;
        }
        const Token& head = toks[0];
        if (head.text == "qreg") {
            if (have_qreg) {
                throw SyntaxError(line_no, head.column, "duplicate qreg declaration");
            }
            if (toks.size() != 2) {
                throw SyntaxError(line_no, head.column, "expected 'qreg <n>'");
            }
            c.n_qubits = parse_int(toks[1], line_no);
            if (c.n_qubits < 0) {
                throw SyntaxError(line_no, toks[1].column, "negative qubit count");
            }
            have_qreg = true;
            continue;
        }
        if (!have_qreg) {
            throw SyntaxError(line_no, head.column, "gate before qreg declaration");
        }

        Gate g;
        std::size_t arity = 1;
        std::string name = head.text;
        std::string arg;
        bool has_arg = false;
        if (auto open = name.find('('); open != std::string::npos) {
            if (name.back() != ')') {
                throw SyntaxError(line_no, head.column + static_cast<int>(name.size()),
                                  "missing ')'");
            }
            arg = name.substr(open + 1, name.size() - open - 2);
            name = name.substr(0, open);
            has_arg = true;
        }
        if (name == "h") {
            g.kind = GateKind::H;
        } else if (name == "s") {
            g.kind = GateKind::S;
        } else if (name == "sdg") {
            g.kind = GateKind::Sdg;
        } else if (name == "z") {
            g.kind = GateKind::Z;
        } else if (name == "x") {
            g.kind = GateKind::X;
        } else if (name == "cz") {
            g.kind = GateKind::CZ;
            arity = 2;
        } else if (name == "cx") {
            g.kind = GateKind::CX;
            arity = 2;
        } else if (name == "rz") {
            if (!has_arg) {
                throw SyntaxError(line_no, head.column, "rz needs an angle in parentheses");
            }
            std::string a = arg;
            std::erase(a, ' ');
            if (is_ident(a) && a != "pi") {
                auto [it, inserted] = names.emplace(a, static_cast<ParamId>(c.param_names.size()));
                if (!inserted) {
                    throw RepeatedParameterName(line_no, a);
                }
                c.param_names.push_back(a);
                g.kind = GateKind::RzParam;
                g.param = it->second;
            } else {
                bool clifford = true;
                auto k = parse_angle(a, clifford);
                if (!k) {
                    throw SyntaxError(line_no, head.column + 3, "cannot parse angle '" + arg + "'");
                }
                if (!clifford) {
                    throw NonCliffordConstant(line_no, arg);
                }
                g.kind = GateKind::RzClifford;
                g.k = *k;
            }
        } else {
            throw SyntaxError(line_no, head.column, "unknown gate '" + name + "'");
        }
        if (has_arg && name != "rz") {
            throw SyntaxError(line_no, head.column, "gate '" + name + "' takes no argument");
        }
        if (toks.size() != arity + 1) {
            throw SyntaxError(line_no, head.column,
                              "gate '" + name + "' expects " + std::to_string(arity) + " qubit(s)");
        }
        int qs[2] = {-1, -1};
        for (std::size_t i = 0; i < arity; ++i) {
            qs[i] = parse_int(toks[i + 1], line_no);
            if (qs[i] < 0 || qs[i] >= c.n_qubits) {
                throw SyntaxError(line_no, toks[i + 1].column,
                                  "qubit " + toks[i + 1].text + " out of range");
            }
        }
        if (arity == 2 && qs[0] == qs[1]) {
            throw SyntaxError(line_no, toks[2].column, "two-qubit gate on a single qubit");
        }
        g.q0 = qs[0];
        g.q1 = qs[1];
        c.gates.push_back(g);
    }
    if (!have_qreg) {
        throw SyntaxError(line_no == 0 ? 1 : line_no, 1, "missing qreg declaration");
    }
    return c;
}

std::string emit_circuit(const Circuit& c) {
    std::ostringstream out;
    out << "qreg " << c.n_qubits << "\n";
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H:
                out << "h " << g.q0;
                break;
            case GateKind::S:
                out << "s " << g.q0;
                break;
            case GateKind::Sdg:
                out << "sdg " << g.q0;
                break;
            case GateKind::Z:
                out << "z " << g.q0;
                break;
            case GateKind::X:
                out << "x " << g.q0;
                break;
            case GateKind::CZ:
                out << "cz " << g.q0 << " " << g.q1;
                break;
            case GateKind::CX:
                out << "cx " << g.q0 << " " << g.q1;
                break;
            case GateKind::RzClifford:
                out << "rz(" << mod4(g.k) << "pi/2) " << g.q0;
                break;
            case GateKind::RzParam:
                out << "rz(" << c.param_names.at(static_cast<std::size_t>(g.param)) << ") " << g.q0;
                break;
        }
        out << "\n";
    }
    return out.str();
}

SpiderNetwork circuit_to_network(const Circuit& c) {
    SpiderNetwork net;
    std::vector<int> front(static_cast<std::size_t>(c.n_qubits));
    for (int q = 0; q < c.n_qubits; ++q) {
        front[static_cast<std::size_t>(q)] = net.add_boundary(BoundaryKind::Input, q);
    }
    auto extend = [&](int q, int node) {
        net.connect(front[static_cast<std::size_t>(q)], node);
        front[static_cast<std::size_t>(q)] = node;
    };
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H:
                extend(g.q0, net.add_hbox());
                break;
            case GateKind::S:
                extend(g.q0, net.add_z(Phase(1)));
                break;
            case GateKind::Sdg:
                extend(g.q0, net.add_z(Phase(3)));
                break;
            case GateKind::Z:
                extend(g.q0, net.add_z(Phase(2)));
                break;
            case GateKind::X:
                extend(g.q0, net.add_x(Phase(2)));
                break;
            case GateKind::RzClifford:
                extend(g.q0, net.add_z(Phase(g.k)));
                break;
            case GateKind::RzParam:
                extend(g.q0, net.add_z(Phase::param(g.param)));
                break;
            case GateKind::CZ: {
                int a = net.add_z();
                int b = net.add_z();
                extend(g.q0, a);
                extend(g.q1, b);
                int h = net.add_hbox();
                net.connect(a, h);
                net.connect(h, b);
                break;
            }
            case GateKind::CX: {
                int a = net.add_z();
                int b = net.add_x();
                extend(g.q0, a);
                extend(g.q1, b);
                net.connect(a, b);
                break;
            }
        }
    }
    for (int q = 0; q < c.n_qubits; ++q) {
        extend(q, net.add_boundary(BoundaryKind::Output, q));
    }
    return net;
}

Diagram circuit_to_diagram(const Circuit& c) {
    return to_graph_like(circuit_to_network(c));
}

}  // namespace zxparam
