#include "grasscode/code.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace grasscode {

SubspaceCode make_code(FieldPtr field, unsigned n, unsigned k,
                       std::vector<Subspace> members, std::optional<VerifiedTag> tag) {
    if (!field) throw std::invalid_argument("null field");
    for (const auto& s : members)
        if (s.n != n || s.k != k || s.q != field->q())
            throw std::invalid_argument("code member has mismatched parameters");
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("duplicate code member");
    if (tag && members.empty())
        throw std::invalid_argument("a verified tag requires at least one member");
    SubspaceCode c;
    c.field = std::move(field);
    c.n = n;
    c.k = k;
    c.members = std::move(members);
    c.tag = tag;
    return c;
}

std::string code_to_string(const SubspaceCode& code,
                           const std::vector<std::string>& comments) {
    if (code.k == 0)
        throw std::invalid_argument("cannot serialize a code of 0-dimensional subspaces");
    std::string out = "grasscode v1\n";
    out += "q=" + code.field->spec_string() + " n=" + std::to_string(code.n) +
           " k=" + std::to_string(code.k) + "\n";
    for (const auto& c : comments) out += "# " + c + "\n";
    for (const auto& s : code.members) out += s.line_string() + "\n";
    return out;
}

void write_code_file(const SubspaceCode& code, const std::string& path,
                     const std::vector<std::string>& comments) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << code_to_string(code, comments);
    if (!f) throw std::runtime_error("write failed: " + path);
}

SubspaceCode parse_code_string(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "grasscode v1")
        throw std::invalid_argument("bad header: expected 'grasscode v1'");
    if (!std::getline(in, line)) throw std::invalid_argument("missing parameter line");

    FieldPtr field;
    unsigned n = 0, k = 0;
    {
        std::istringstream ps(line);
        std::string tok;
        bool got_q = false, got_n = false, got_k = false;
        while (ps >> tok) {
            if (tok.rfind("q=", 0) == 0) {
                field = parse_field(tok.substr(2));
                got_q = true;
            } else if (tok.rfind("n=", 0) == 0) {
                n = static_cast<unsigned>(std::stoul(tok.substr(2)));
                got_n = true;
            } else if (tok.rfind("k=", 0) == 0) {
                k = static_cast<unsigned>(std::stoul(tok.substr(2)));
                got_k = true;
            } else {
                throw std::invalid_argument("unknown parameter token: " + tok);
            }
        }
        if (!got_q || !got_n || !got_k)
            throw std::invalid_argument("parameter line must set q, n and k");
    }
    if (k == 0 || k > n) throw std::invalid_argument("bad dimensions in header");

    std::vector<Subspace> members;
    std::string prev;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!prev.empty() && !(prev < line))
            throw std::invalid_argument(prev == line ? "duplicate codeword line"
                                                     : "codeword lines not sorted");
        prev = line;

        std::vector<std::vector<std::uint16_t>> rows;
        std::size_t pos = 0;
        while (pos <= line.size()) {
            auto bar = line.find('|', pos);
            std::string part = line.substr(pos, bar == std::string::npos ? bar : bar - pos);
            if (part.size() != n)
                throw std::invalid_argument("row has wrong length: " + part);
            std::vector<std::uint16_t> row(n);
            for (unsigned j = 0; j < n; ++j) {
                unsigned v = digit_value(part[j]);
                if (v >= field->q()) throw std::invalid_argument("digit out of field range");
                row[j] = static_cast<std::uint16_t>(v);
            }
            rows.push_back(std::move(row));
            if (bar == std::string::npos) break;
            pos = bar + 1;
        }
        if (rows.size() != k) throw std::invalid_argument("codeword has wrong row count");

        Subspace parsed;
        parsed.q = field->q();
        parsed.n = n;
        parsed.k = k;
        for (const auto& r : rows) parsed.m.insert(parsed.m.end(), r.begin(), r.end());
        Subspace canon = canonicalize(*field, rows, n);
        if (canon.k != k || canon.m != parsed.m)
            throw std::invalid_argument("non-canonical codeword: " + line);
        members.push_back(std::move(canon));
    }
    return make_code(field, n, k, std::move(members));
}

SubspaceCode parse_code_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_code_string(ss.str());
}

}  // namespace grasscode
