#ifndef LINOBS_FIELD_HPP
#define LINOBS_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace linobs {

enum class FieldKind { rational, prime, cyclotomic, ratfun };

// Which exact field a scalar lives in. Text form: "rational", "fp:7",
// "cyclotomic:12", "ratfun:z,w".
struct FieldDescriptor {
    FieldKind kind = FieldKind::rational;
    std::uint64_t p = 0;
    unsigned m = 0;
    std::vector<std::string> variables;

    static FieldDescriptor rational();
    static FieldDescriptor prime(std::uint64_t p);
    static FieldDescriptor cyclotomic(unsigned m);
    static FieldDescriptor ratfun(std::vector<std::string> variables);

    static FieldDescriptor parse(std::string_view text);
    std::string to_string() const;

    // Throws std::invalid_argument when p is not prime, m < 1, or variable
    // names repeat.
    void validate() const;

    /// Characteristic of the field (0 or p).
    std::uint64_t characteristic() const { return kind == FieldKind::prime ? p : 0; }

    bool operator==(const FieldDescriptor&) const = default;
};

/// Shared, immutable field context. Cheap to copy.
class Field {
public:
    Field();
    explicit Field(const FieldDescriptor& desc);

    const FieldDescriptor& descriptor() const { return impl_->desc; }
    FieldKind kind() const { return impl_->desc.kind; }
    std::uint64_t characteristic() const { return impl_->desc.characteristic(); }

    /// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
    /// Empty unless kind() == cyclotomic.
    const std::vector<mpq_class>& cyclotomic_modulus() const { return impl_->phi; }
    std::size_t extension_degree() const { return impl_->phi.empty() ? 1 : impl_->phi.size() - 1; }

    const std::shared_ptr<const std::vector<std::string>>& variable_names() const { return impl_->vars; }

    bool operator==(const Field& other) const {
        return impl_ == other.impl_ || impl_->desc == other.impl_->desc;
    }

private:
    struct Impl {
        FieldDescriptor desc;
        std::vector<mpq_class> phi;
        std::shared_ptr<const std::vector<std::string>> vars;
    };
    static std::shared_ptr<const Impl> make_impl(const FieldDescriptor& desc);
    std::shared_ptr<const Impl> impl_;
};

/// Validates the descriptor and builds its arithmetic context.
Field field_make(const FieldDescriptor& desc);

bool is_prime(std::uint64_t n);

/// Distinct prime factors in increasing order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace linobs

#endif  // LINOBS_FIELD_HPP
