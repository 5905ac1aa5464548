#include "gsv/groups.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gsv {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
    int n = static_cast<int>(table_.size());
    if (n == 0) fail(ErrKind::Validation, "empty-group", "group must have at least one element");
    if (labels_.size() != table_.size())
        fail(ErrKind::Validation, "bad-group-table", "label count does not match table size");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n)
            fail(ErrKind::Validation, "bad-group-table", "table is not square");
        for (int v : row)
            if (v < 0 || v >= n) fail(ErrKind::Validation, "bad-group-table", "table entry out of range");
    }
    validate_axioms();
}

static int find_identity(const std::vector<std::vector<int>>& t) {
    int n = static_cast<int>(t.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = (t[e][a] == a && t[a][e] == a);
        if (ok) return e;
    }
    return -1;
}

void FiniteGroup::validate_axioms() {
    int n = size();
    int e = find_identity(table_);
    if (e < 0) fail(ErrKind::Validation, "no-identity", "multiplication table has no two-sided identity");
    id_ = e;
    auto& inv = inv_;
    inv.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == e && table_[b][a] == e) inv[a] = b;
        if (inv[a] < 0)
            fail(ErrKind::Validation, "no-inverse", "element " + labels_[a] + " has no inverse");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    fail(ErrKind::Validation, "not-associative",
                         "associativity fails at (" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ")");
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) fail(ErrKind::Validation, "bad-group", "cyclic group order must be >= 1");
    std::vector<std::string> labels(n);
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a) {
        labels[a] = "g" + std::to_string(a);
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    labels[0] = "1";
    return FiniteGroup(std::move(labels), std::move(t));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 5) fail(ErrKind::Validation, "bad-group", "sym n supported for 1 <= n <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = i;
    std::vector<int> p = base;
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    // identity first
    std::stable_sort(perms.begin(), perms.end(),
                     [&](const auto& a, const auto& b) { return (a == base) > (b == base); });
    int m = static_cast<int>(perms.size());
    std::map<std::vector<int>, int> index;
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) {
        index[perms[i]] = i;
        std::string s = "(";
        for (int j = 0; j < n; ++j) s += std::to_string(perms[i][j]);
        labels[i] = s + ")";
    }
    labels[0] = "1";
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            std::vector<int> c(n);
            for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = index[c];
        }
    return FiniteGroup(std::move(labels), std::move(t));
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
    int na = a.size(), nb = b.size();
    std::vector<std::string> labels(na * nb);
    std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb));
    auto idx = [&](int i, int j) { return i * nb + j; };
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) {
            labels[idx(i, j)] = "(" + a.label(i) + "," + b.label(j) + ")";
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2)
                    t[idx(i, j)][idx(i2, j2)] = idx(a.mul(i, i2), b.mul(j, j2));
        }
    return FiniteGroup(std::move(labels), std::move(t));
}

int FiniteGroup::order_of(int a) const {
    int o = 1, x = a;
    while (x != id_) {
        x = mul(x, a);
        ++o;
    }
    return o;
}

std::vector<int> FiniteGroup::closure(std::vector<int> seed) const {
    std::set<int> s(seed.begin(), seed.end());
    s.insert(id_);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> cur(s.begin(), s.end());
        for (int a : cur)
            for (int b : cur) {
                if (s.insert(mul(a, b)).second) grew = true;
                if (s.insert(inv(a)).second) grew = true;
            }
    }
    return std::vector<int>(s.begin(), s.end());
}

std::vector<std::vector<int>> FiniteGroup::all_subgroups() const {
    std::set<std::vector<int>> found;
    found.insert({id_});
    bool grew = true;
    while (grew) {
        grew = false;
        auto snapshot = found;
        for (const auto& h : snapshot)
            for (int g = 0; g < size(); ++g) {
                if (std::binary_search(h.begin(), h.end(), g)) continue;
                auto seed = h;
                seed.push_back(g);
                if (found.insert(closure(seed)).second) grew = true;
            }
    }
    return std::vector<std::vector<int>>(found.begin(), found.end());
}

bool FiniteGroup::is_normal(const std::vector<int>& sub) const {
    for (int g = 0; g < size(); ++g)
        for (int h : sub) {
            int conj = mul(mul(g, h), inv(g));
            if (!std::binary_search(sub.begin(), sub.end(), conj)) return false;
        }
    return true;
}

bool GroupHom::is_homomorphism() const {
    int n = domain->size();
    if (static_cast<int>(image.size()) != n) return false;
    for (int v : image)
        if (v < 0 || v >= codomain->size()) return false;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (image[domain->mul(a, b)] != codomain->mul(image[a], image[b])) return false;
    return true;
}

bool GroupHom::is_injective() const {
    std::set<int> seen(image.begin(), image.end());
    return static_cast<int>(seen.size()) == domain->size();
}

bool GroupHom::is_surjective() const {
    std::set<int> seen(image.begin(), image.end());
    return static_cast<int>(seen.size()) == codomain->size();
}

void GroupExtension::rebind() {
    iota.domain = &G;
    iota.codomain = &E;
    pi.domain = &E;
    pi.codomain = &Gamma;
}

ExtensionCertificate validate_extension(const GroupExtension& ext) {
    ExtensionCertificate cert;
    cert.table_ok = true; // FiniteGroup construction already validated the axioms
    cert.iota_hom = ext.iota.is_homomorphism();
    if (!cert.iota_hom) {
        cert.witness = "iota is not a homomorphism";
        return cert;
    }
    cert.iota_injective = ext.iota.is_injective();
    if (!cert.iota_injective) {
        cert.witness = "iota is not injective";
        return cert;
    }
    cert.pi_hom = ext.pi.is_homomorphism();
    if (!cert.pi_hom) {
        cert.witness = "pi is not a homomorphism";
        return cert;
    }
    cert.pi_surjective = ext.pi.is_surjective();
    if (!cert.pi_surjective) {
        for (int c = 0; c < ext.Gamma.size(); ++c)
            if (std::find(ext.pi.image.begin(), ext.pi.image.end(), c) == ext.pi.image.end()) {
                cert.witness = "pi misses " + ext.Gamma.label(c);
                break;
            }
        return cert;
    }
    // exactness: image(iota) == kernel(pi)
    std::set<int> img(ext.iota.image.begin(), ext.iota.image.end());
    std::set<int> ker;
    for (int e = 0; e < ext.E.size(); ++e)
        if (ext.pi(e) == ext.Gamma.identity()) ker.insert(e);
    cert.exact = (img == ker);
    if (!cert.exact) {
        for (int e : ker)
            if (!img.count(e)) {
                cert.witness = "kernel element " + ext.E.label(e) + " is not in image(iota)";
                return cert;
            }
        for (int e : img)
            if (!ker.count(e)) {
                cert.witness = "image element " + ext.E.label(e) + " is not in ker(pi)";
                return cert;
            }
    }
    return cert;
}

std::vector<SectionSubgroup> find_section_subgroups(const GroupExtension& ext) {
    std::vector<SectionSubgroup> out;
    std::set<int> img(ext.iota.image.begin(), ext.iota.image.end());
    for (const auto& H : ext.E.all_subgroups()) {
        if (!ext.E.is_normal(H)) continue;
        bool trivial_meet = true;
        for (int h : H)
            if (h != ext.E.identity() && img.count(h)) {
                trivial_meet = false;
                break;
            }
        if (!trivial_meet) continue;
        SectionSubgroup s;
        s.H = H;
        for (int h : H) s.iso.push_back(ext.pi(h));
        s.H_image = s.iso;
        std::sort(s.H_image.begin(), s.H_image.end());
        out.push_back(std::move(s));
    }
    return out;
}

namespace {

// Quotient group E/N for normal N; returns the group plus the coset map.
FiniteGroup quotient_group(const FiniteGroup& E, const std::vector<int>& N, std::vector<int>& coset_of) {
    int n = E.size();
    coset_of.assign(n, -1);
    std::vector<int> reps;
    for (int e = 0; e < n; ++e) {
        if (coset_of[e] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(e);
        for (int h : N) coset_of[E.mul(e, h)] = c;
    }
    int m = static_cast<int>(reps.size());
    std::vector<std::string> labels(m);
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a) {
        labels[a] = E.label(reps[a]) + "N";
        for (int b = 0; b < m; ++b) t[a][b] = coset_of[E.mul(reps[a], reps[b])];
    }
    return FiniteGroup(std::move(labels), std::move(t));
}

} // namespace

FiberProductResult fiber_product_reconstruct(const GroupExtension& ext, const SectionSubgroup& H) {
    FiberProductResult res;
    res.quotient = quotient_group(ext.E, H.H, res.coset_of);

    // Gamma/H'
    std::vector<int> gamma_coset;
    FiniteGroup gq = quotient_group(ext.Gamma, H.H_image, gamma_coset);

    // induced map E/H -> Gamma/H' (well-defined since pi(H) = H')
    int m = res.quotient.size();
    std::vector<int> induced(m, -1);
    for (int e = 0; e < ext.E.size(); ++e) induced[res.coset_of[e]] = gamma_coset[ext.pi(e)];

    // fiber product inside (E/H) x Gamma
    std::vector<std::pair<int, int>> elems;
    for (int a = 0; a < m; ++a)
        for (int c = 0; c < ext.Gamma.size(); ++c)
            if (induced[a] == gamma_coset[c]) elems.emplace_back(a, c);
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
    int fn = static_cast<int>(elems.size());
    std::vector<std::string> labels(fn);
    std::vector<std::vector<int>> t(fn, std::vector<int>(fn));
    for (int i = 0; i < fn; ++i) {
        labels[i] = "(" + res.quotient.label(elems[i].first) + "," + ext.Gamma.label(elems[i].second) + ")";
        res.proj_quotient.push_back(elems[i].first);
        res.proj_gamma.push_back(elems[i].second);
        for (int j = 0; j < fn; ++j) {
            std::pair<int, int> prod{res.quotient.mul(elems[i].first, elems[j].first),
                                     ext.Gamma.mul(elems[i].second, elems[j].second)};
            t[i][j] = index.at(prod);
        }
    }
    res.fiber = FiniteGroup(std::move(labels), std::move(t));

    if (res.fiber.size() != ext.E.size()) return res;

    // Candidate images per fiber element: e in E with matching coset and pi.
    std::vector<std::vector<int>> constraint(fn);
    for (int i = 0; i < fn; ++i)
        for (int e = 0; e < ext.E.size(); ++e)
            if (res.coset_of[e] == res.proj_quotient[i] && ext.pi(e) == res.proj_gamma[i])
                constraint[i].push_back(e);

    auto iso = find_isomorphism(res.fiber, ext.E, constraint);
    if (iso) {
        res.iso = *iso;
        res.isomorphic = true;
    }
    return res;
}

namespace {

bool extend_iso(const FiniteGroup& a, const FiniteGroup& b, std::vector<int>& map,
                std::vector<bool>& used, int next, const std::vector<std::vector<int>>& constraint) {
    int n = a.size();
    while (next < n && map[next] >= 0) ++next;
    if (next == n) return true;
    std::vector<int> cands;
    if (!constraint.empty())
        cands = constraint[next];
    else
        for (int y = 0; y < n; ++y) cands.push_back(y);
    for (int y : cands) {
        if (used[y] || b.order_of(y) != a.order_of(next)) continue;
        // tentatively map `next` and propagate products with the mapped set
        std::vector<std::pair<int, int>> placed;
        auto assign = [&](int u, int v) -> bool {
            if (map[u] >= 0) return map[u] == v;
            if (used[v] || a.order_of(u) != b.order_of(v)) return false;
            if (!constraint.empty() &&
                std::find(constraint[u].begin(), constraint[u].end(), v) == constraint[u].end())
                return false;
            map[u] = v;
            used[v] = true;
            placed.emplace_back(u, v);
            return true;
        };
        bool ok = assign(next, y);
        for (std::size_t i = 0; ok && i < placed.size(); ++i) {
            int u = placed[i].first;
            for (int w = 0; ok && w < n; ++w) {
                if (map[w] < 0) continue;
                ok = assign(a.mul(u, w), b.mul(map[u], map[w])) &&
                     assign(a.mul(w, u), b.mul(map[w], map[u]));
            }
        }
        if (ok && extend_iso(a, b, map, used, next + 1, constraint)) return true;
        for (auto [u, v] : placed) {
            map[u] = -1;
            used[v] = false;
        }
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                                 const std::vector<std::vector<int>>& constraint) {
    if (a.size() != b.size()) return std::nullopt;
    // order profiles must match
    std::multiset<int> pa, pb;
    for (int i = 0; i < a.size(); ++i) {
        pa.insert(a.order_of(i));
        pb.insert(b.order_of(i));
    }
    if (pa != pb) return std::nullopt;
    std::vector<int> map(a.size(), -1);
    std::vector<bool> used(b.size(), false);
    map[a.identity()] = b.identity();
    used[b.identity()] = true;
    if (!constraint.empty()) {
        auto& c = constraint[a.identity()];
        if (std::find(c.begin(), c.end(), b.identity()) == c.end()) return std::nullopt;
    }
    if (extend_iso(a, b, map, used, 0, constraint)) return map;
    return std::nullopt;
}

} // namespace gsv
