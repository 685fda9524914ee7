#include "tgcsa/batch.hpp"

#include <charconv>
#include <istream>
#include <sstream>

namespace tgcsa {

namespace {

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::uint32_t number(const std::string& tok, std::size_t line, const char* what) {
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) {
        throw ParseError(line, std::string("bad ") + what + " '" + tok + "'");
    }
    if (v == 0) throw ParseError(line, std::string(what) + " must be >= 1");
    return v;
}

std::size_t vertex_args(char op) {
    switch (op) {
        case 'D':
        case 'R':
            return 1;
        case 'E':
            return 2;
        case 'S':
        case 'A':
        case 'X':
            return 0;
        default:
            return static_cast<std::size_t>(-1);
    }
}

}  // namespace

std::vector<BatchQuery> parse_batch(std::istream& in) {
    std::vector<BatchQuery> out;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        auto tok = split(raw);
        if (tok.empty()) continue;
        if (tok[0].size() != 1 || vertex_args(tok[0][0]) == static_cast<std::size_t>(-1)) {
            throw ParseError(line, "unknown query type '" + tok[0] + "'");
        }
        BatchQuery q;
        q.op = tok[0][0];
        q.line = line;
        std::size_t nv = vertex_args(q.op);
        std::size_t k = 1;
        if (tok.size() < 1 + nv + 1) throw ParseError(line, "too few fields");
        if (nv >= 1) q.u = number(tok[k++], line, "vertex");
        if (nv == 2) q.v = number(tok[k++], line, "vertex");
        std::uint32_t t = number(tok[k++], line, "time");
        if (k == tok.size()) {
            q.sem = TimeSemantics{TimeSemantics::Kind::instant, t, 0};
        } else {
            if (tok[k] != "..") throw ParseError(line, "expected '..' before the interval end");
            if (++k == tok.size()) throw ParseError(line, "missing interval end");
            std::uint32_t t_end = number(tok[k++], line, "time");
            if (t_end <= t) throw ParseError(line, "interval end must exceed its start");
            bool weak = false;
            if (k < tok.size()) {
                if (q.op == 'A' || q.op == 'X') throw ParseError(line, "event queries take no semantics letter");
                if (tok[k] == "w") {
                    weak = true;
                } else if (tok[k] != "s") {
                    throw ParseError(line, "semantics must be 'w' or 's'");
                }
                ++k;
            }
            if (k != tok.size()) throw ParseError(line, "trailing fields");
            q.sem = weak ? TimeSemantics::weak(t, t_end) : TimeSemantics::strong(t, t_end);
        }
        out.push_back(q);
    }
    return out;
}

std::vector<BatchQuery> parse_batch(const std::string& text) {
    std::istringstream is(text);
    return parse_batch(is);
}

std::string format_vertices(const VertexSet& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(vs[i]);
    }
    return s;
}

std::string format_edges(const EdgeSet& es) {
    std::string s;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (i) s += ' ';
        s += '(' + std::to_string(es[i].first) + ',' + std::to_string(es[i].second) + ')';
    }
    return s;
}

namespace {

std::uint32_t event_end(const BatchQuery& q) {
    return q.sem.kind == TimeSemantics::Kind::instant ? q.sem.t + 1 : q.sem.t_end;
}

}  // namespace

QueryAnswer run_query(const QueryEngine& engine, const BatchQuery& q) {
    switch (q.op) {
        case 'D': {
            auto r = engine.direct(q.u, q.sem);
            return {format_vertices(r), r.size()};
        }
        case 'R': {
            auto r = engine.reverse(q.u, q.sem);
            return {format_vertices(r), r.size()};
        }
        case 'E': {
            bool b = engine.active(q.u, q.v, q.sem);
            return {b ? "true" : "false", b ? 1U : 0U};
        }
        case 'S': {
            auto r = engine.snapshot(q.sem);
            return {format_edges(r), r.size()};
        }
        case 'A': {
            auto r = engine.activated(q.sem.t, event_end(q));
            return {format_edges(r), r.size()};
        }
        case 'X': {
            auto r = engine.deactivated(q.sem.t, event_end(q));
            return {format_edges(r), r.size()};
        }
        default:
            throw std::invalid_argument("unknown query type");
    }
}

std::uint64_t count_query(const QueryEngine& engine, const BatchQuery& q) {
    switch (q.op) {
        case 'D':
            return engine.direct(q.u, q.sem).size();
        case 'R':
            return engine.reverse(q.u, q.sem).size();
        case 'E':
            return engine.active(q.u, q.v, q.sem) ? 1 : 0;
        case 'S':
            return engine.snapshot(q.sem).size();
        case 'A':
            return engine.activated(q.sem.t, event_end(q)).size();
        case 'X':
            return engine.deactivated(q.sem.t, event_end(q)).size();
        default:
            throw std::invalid_argument("unknown query type");
    }
}

}  // namespace tgcsa
