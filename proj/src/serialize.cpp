#include "qgrass/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace qgrass {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json subspace_to_json(const Subspace& s) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < s.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < s.n(); ++j) row.push_back(int(s.entry(i, j)));
        rows.push_back(std::move(row));
    }
    return ordered_json{{"n", s.n()}, {"q", s.q()}, {"dim", s.dim()}, {"rows", std::move(rows)}};
}

Subspace subspace_from_json(const json& j) {
    int n = j.at("n").get<int>();
    int q = j.at("q").get<int>();
    int dim = j.at("dim").get<int>();
    const FieldSpec& f = make_field(q);
    std::vector<std::vector<uint8_t>> rows;
    for (const auto& jr : j.at("rows")) {
        std::vector<uint8_t> row;
        for (const auto& v : jr) {
            long e = v.get<long>();
            if (e < 0 || e >= q)
                throw std::invalid_argument("subspace_from_json: entry out of field range");
            row.push_back(static_cast<uint8_t>(e));
        }
        rows.push_back(std::move(row));
    }
    Subspace s = canonicalize(rows, f, n);
    if (s.dim() != dim)
        throw std::invalid_argument("subspace_from_json: rows are not a basis of the declared dimension");
    // the stored rows must already be the canonical representative
    for (int i = 0; i < s.dim(); ++i)
        for (int j2 = 0; j2 < n; ++j2)
            if (s.entry(i, j2) != rows[static_cast<size_t>(i)][static_cast<size_t>(j2)])
                throw std::invalid_argument("subspace_from_json: rows are not in canonical form");
    return s;
}

ordered_json family_to_json(const Family& fam) {
    const auto& p = fam.params();
    ordered_json defining = ordered_json::array();
    for (const auto& d : fam.defining()) defining.push_back(subspace_to_json(d));
    ordered_json members = ordered_json::array();
    for (const auto& m : fam.members()) members.push_back(subspace_to_json(m));
    return ordered_json{
        {"params", ordered_json{{"n", p.n}, {"k", p.k}, {"t", p.t}, {"q", p.q}}},
        {"provenance", construction_name(fam.construction())},
        {"defining", std::move(defining)},
        {"members", std::move(members)},
    };
}

Family family_from_json(const json& j) {
    const auto& jp = j.at("params");
    FamilyParams p{jp.at("n").get<int>(), jp.at("k").get<int>(), jp.at("t").get<int>(),
                   jp.at("q").get<int>()};
    Construction prov = construction_from_name(j.at("provenance").get<std::string>());
    std::vector<Subspace> defining;
    if (j.contains("defining"))
        for (const auto& jd : j.at("defining")) defining.push_back(subspace_from_json(jd));
    std::vector<Subspace> members;
    for (const auto& jm : j.at("members")) {
        Subspace m = subspace_from_json(jm);
        if (m.n() != p.n || m.q() != p.q)
            throw std::invalid_argument("family_from_json: member ambient space disagrees with params");
        members.push_back(std::move(m));
    }
    // Family's constructor re-validates dimensions, canonical form, duplicates
    return Family(p, prov, std::move(defining), std::move(members));
}

namespace {

constexpr char kMagic[4] = {'Q', 'G', 'F', 'B'};
constexpr uint8_t kBinaryVersion = 1;

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 24));
}

uint32_t get_u32(const std::vector<uint8_t>& in, size_t& pos) {
    if (pos + 4 > in.size()) throw std::invalid_argument("family_from_binary: truncated input");
    uint32_t v = in[pos] | (uint32_t(in[pos + 1]) << 8) | (uint32_t(in[pos + 2]) << 16) |
                 (uint32_t(in[pos + 3]) << 24);
    pos += 4;
    return v;
}

// rows packed two entries per byte (field indices fit a nibble for q <= 9)
void pack_subspace(std::vector<uint8_t>& out, const Subspace& s) {
    out.push_back(static_cast<uint8_t>(s.dim()));
    uint8_t acc = 0;
    bool half = false;
    for (uint8_t e : s.raw()) {
        if (!half) {
            acc = e;
            half = true;
        } else {
            out.push_back(static_cast<uint8_t>(acc | (e << 4)));
            half = false;
        }
    }
    if (half) out.push_back(acc);
}

Subspace unpack_subspace(const std::vector<uint8_t>& in, size_t& pos, int n, const FieldSpec& f) {
    if (pos >= in.size()) throw std::invalid_argument("family_from_binary: truncated input");
    int dim = in[pos++];
    size_t entries = static_cast<size_t>(dim) * static_cast<size_t>(n);
    size_t nbytes = (entries + 1) / 2;
    if (pos + nbytes > in.size()) throw std::invalid_argument("family_from_binary: truncated input");
    std::vector<uint8_t> rows(entries);
    for (size_t i = 0; i < entries; ++i) {
        uint8_t b = in[pos + i / 2];
        rows[i] = (i % 2 == 0) ? (b & 0x0f) : (b >> 4);
        if (rows[i] >= f.q())
            throw std::invalid_argument("family_from_binary: entry out of field range");
    }
    pos += nbytes;
    return from_canonical_rows(std::move(rows), dim, n, f);
}

}  // namespace

std::vector<uint8_t> family_to_binary(const Family& fam) {
    const auto& p = fam.params();
    std::vector<uint8_t> out;
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(kBinaryVersion);
    out.push_back(static_cast<uint8_t>(p.q));
    out.push_back(static_cast<uint8_t>(p.n));
    out.push_back(static_cast<uint8_t>(p.k));
    out.push_back(static_cast<uint8_t>(p.t));
    out.push_back(static_cast<uint8_t>(fam.construction()));
    put_u32(out, static_cast<uint32_t>(fam.defining().size()));
    put_u32(out, static_cast<uint32_t>(fam.size()));
    for (const auto& d : fam.defining()) pack_subspace(out, d);
    for (const auto& m : fam.members()) pack_subspace(out, m);
    return out;
}

Family family_from_binary(const std::vector<uint8_t>& bytes) {
    size_t pos = 0;
    if (bytes.size() < 14 || !std::equal(kMagic, kMagic + 4, bytes.begin()))
        throw std::invalid_argument("family_from_binary: bad magic");
    pos = 4;
    if (bytes[pos++] != kBinaryVersion) throw std::invalid_argument("family_from_binary: bad version");
    FamilyParams p;
    p.q = bytes[pos++];
    p.n = bytes[pos++];
    p.k = bytes[pos++];
    p.t = bytes[pos++];
    auto prov = static_cast<Construction>(bytes[pos++]);
    const FieldSpec& f = make_field(p.q);
    uint32_t ndef = get_u32(bytes, pos);
    uint32_t nmem = get_u32(bytes, pos);
    std::vector<Subspace> defining;
    for (uint32_t i = 0; i < ndef; ++i) defining.push_back(unpack_subspace(bytes, pos, p.n, f));
    std::vector<Subspace> members;
    for (uint32_t i = 0; i < nmem; ++i) members.push_back(unpack_subspace(bytes, pos, p.n, f));
    if (pos != bytes.size()) throw std::invalid_argument("family_from_binary: trailing bytes");
    return Family(p, prov, std::move(defining), std::move(members));
}

void save_family(const Family& fam, const std::string& path, bool binary) {
    std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    if (binary) {
        auto bytes = family_to_binary(fam);
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    } else {
        out << family_to_json(fam).dump(2) << "\n";
    }
}

Family load_family(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (bytes.size() >= 4 && std::equal(kMagic, kMagic + 4, bytes.begin()))
        return family_from_binary(bytes);
    return family_from_json(json::parse(bytes.begin(), bytes.end()));
}

bool matches_schema(const json& value, const json& schema, std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error) *error = msg;
        return false;
    };
    if (schema.contains("type")) {
        const std::string ty = schema.at("type").get<std::string>();
        bool ok = (ty == "object" && value.is_object()) || (ty == "array" && value.is_array()) ||
                  (ty == "string" && value.is_string()) ||
                  (ty == "integer" && value.is_number_integer()) ||
                  (ty == "boolean" && value.is_boolean()) || (ty == "null" && value.is_null());
        if (!ok) return fail("expected type " + ty + ", got " + std::string(value.type_name()));
    }
    if (schema.contains("required")) {
        for (const auto& key : schema.at("required")) {
            if (!value.contains(key.get<std::string>()))
                return fail("missing required key " + key.get<std::string>());
        }
    }
    if (schema.contains("properties") && value.is_object()) {
        for (const auto& [key, sub] : schema.at("properties").items()) {
            if (!value.contains(key)) continue;
            std::string suberr;
            if (!matches_schema(value.at(key), sub, &suberr))
                return fail("property " + key + ": " + suberr);
        }
    }
    if (schema.contains("items") && value.is_array()) {
        const auto& item_schema = schema.at("items");
        for (size_t i = 0; i < value.size(); ++i) {
            std::string suberr;
            if (!matches_schema(value.at(i), item_schema, &suberr))
                return fail("item " + std::to_string(i) + ": " + suberr);
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& v : schema.at("enum"))
            if (v == value) found = true;
        if (!found) return fail("value not in enum");
    }
    return true;
}

}  // namespace qgrass
