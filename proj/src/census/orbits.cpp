#include "heckecount/census/orbits.hpp"

#include "engine.hpp"

#include "heckecount/error.hpp"

namespace hc::census {

std::vector<std::uint32_t> unpack_index(std::uint64_t index, std::uint32_t p, unsigned dim)
{
    std::vector<std::uint32_t> v(dim);
    for (unsigned i = 0; i < dim; ++i) {
        v[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return v;
}

std::uint64_t pack_index(const std::vector<std::uint32_t>& v, std::uint32_t p)
{
    std::uint64_t r = 0;
    for (std::size_t i = v.size(); i-- > 0;)
        r = r * p + v[i];
    return r;
}

AffineAction::AffineAction(std::uint32_t p, unsigned dim, const Apply& apply) : p_(p), dim_(dim)
{
    // chunk length: largest with p^chunk <= 4096
    chunk_ = 1;
    chunk_size_ = p;
    while (chunk_ < dim && chunk_size_ * p <= 4096) {
        ++chunk_;
        chunk_size_ *= p;
    }
    unsigned nchunks = (dim + chunk_ - 1) / chunk_;
    if (p == 2) {
        bits_ = 1;
    } else {
        std::uint64_t maxsum = static_cast<std::uint64_t>(nchunks + 1) * (p - 1);
        bits_ = 4;
        while ((1ull << bits_) <= maxsum)
            bits_ *= 2;
    }
    if (dim * bits_ > 64)
        throw Unsupported("affine action too wide to pack");

    std::vector<std::uint32_t> zero(dim, 0);
    std::vector<std::uint32_t> t = apply(zero);
    translation_ = pack(t);
    std::vector<std::vector<std::uint32_t>> cols(dim);
    for (unsigned i = 0; i < dim; ++i) {
        std::vector<std::uint32_t> e(dim, 0);
        e[i] = 1;
        std::vector<std::uint32_t> img = apply(e);
        cols[i].resize(dim);
        for (unsigned k = 0; k < dim; ++k)
            cols[i][k] = (img[k] + p - t[k]) % p;
    }

    tables_.resize(nchunks);
    for (unsigned c = 0; c < nchunks; ++c) {
        unsigned lo = c * chunk_, hi = std::min(dim, lo + chunk_);
        std::uint64_t count = 1;
        for (unsigned i = lo; i < hi; ++i)
            count *= p;
        tables_[c].resize(count);
        for (std::uint64_t v = 0; v < count; ++v) {
            std::vector<std::uint32_t> img(dim, 0);
            std::uint64_t w = v;
            for (unsigned i = lo; i < hi; ++i) {
                std::uint32_t d = static_cast<std::uint32_t>(w % p);
                w /= p;
                if (d)
                    for (unsigned k = 0; k < dim; ++k)
                        img[k] = (img[k] + d * cols[i][k]) % p;
            }
            tables_[c][v] = pack(img);
        }
    }

    if (p != 2) {
        unsigned per_byte = 8 / bits_;
        unsigned nbytes = (dim * bits_ + 7) / 8;
        decode_.assign(nbytes, std::vector<std::uint64_t>(256, 0));
        std::vector<std::uint64_t> pw(dim + 1, 1);
        for (unsigned i = 1; i <= dim; ++i)
            pw[i] = pw[i - 1] * p;
        std::uint32_t mask = (1u << bits_) - 1;
        for (unsigned b = 0; b < nbytes; ++b)
            for (unsigned byte = 0; byte < 256; ++byte) {
                std::uint64_t acc = 0;
                for (unsigned f = 0; f < per_byte; ++f) {
                    unsigned field = b * per_byte + f;
                    if (field >= dim)
                        break;
                    std::uint32_t val = (byte >> (f * bits_)) & mask;
                    acc += (val % p) * pw[field];
                }
                decode_[b][byte] = acc;
            }
    }
}

std::uint64_t AffineAction::pack(const std::vector<std::uint32_t>& v) const
{
    std::uint64_t r = 0;
    for (unsigned i = 0; i < dim_; ++i)
        r |= static_cast<std::uint64_t>(v[i]) << (i * bits_);
    return r;
}

std::uint64_t AffineAction::operator()(std::uint64_t index) const
{
    std::uint64_t acc = translation_;
    if (p_ == 2) {
        for (const auto& tab : tables_) {
            acc ^= tab[index & (chunk_size_ - 1)];
            index >>= chunk_;
        }
        return acc;
    }
    for (const auto& tab : tables_) {
        acc += tab[index % chunk_size_];
        index /= chunk_size_;
    }
    std::uint64_t r = 0;
    for (const auto& dec : decode_) {
        r += dec[acc & 0xff];
        acc >>= 8;
    }
    return r;
}

namespace {

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

} // namespace

std::vector<Orbit> orbits(std::uint32_t p, unsigned dim, const std::vector<AffineAction>& gens, unsigned threads)
{
    std::uint64_t total = 1;
    for (unsigned i = 0; i < dim; ++i) {
        total *= p;
        if (total > (1ull << 31))
            throw Unsupported("orbit enumeration space too large");
    }
    std::vector<std::uint32_t> parent(total);
    for (std::uint64_t x = 0; x < total; ++x)
        parent[x] = static_cast<std::uint32_t>(x);
    // images are computed in parallel per block, unions stay serial
    const std::uint64_t block = 1u << 18;
    const std::size_t ng = gens.size();
    std::vector<std::uint32_t> image(block * ng);
    for (std::uint64_t base = 0; base < total; base += block) {
        const std::uint64_t n = std::min(block, total - base);
        detail::parallel_slices(n, threads, [&](std::uint64_t lo, std::uint64_t hi, unsigned) {
            for (std::uint64_t i = lo; i < hi; ++i)
                for (std::size_t k = 0; k < ng; ++k)
                    image[i * ng + k] = static_cast<std::uint32_t>(gens[k](base + i));
        });
        for (std::uint64_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < ng; ++k) {
                std::uint32_t a = find_root(parent, static_cast<std::uint32_t>(base + i));
                std::uint32_t b = find_root(parent, image[i * ng + k]);
                if (a == b)
                    continue;
                // keep the smaller index as root so reps are canonical
                if (a < b)
                    parent[b] = a;
                else
                    parent[a] = b;
            }
    }
    std::vector<Orbit> out;
    std::vector<std::uint32_t> slot(total, 0);
    for (std::uint64_t x = 0; x < total; ++x) {
        std::uint32_t r = find_root(parent, static_cast<std::uint32_t>(x));
        if (r == x) {
            slot[x] = static_cast<std::uint32_t>(out.size());
            out.push_back({x, 1});
        } else {
            ++out[slot[r]].size;
        }
    }
    return out;
}

} // namespace hc::census
