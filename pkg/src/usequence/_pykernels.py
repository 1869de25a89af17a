"""Pure-Python modular kernels (reference implementation and fallback)."""


def inv_power_sum(start, stop, step, k, m, alternate=False):
    """``sum_i s_i * x_i^(-k) mod m`` over ``x_i in range(start, stop, step)``.

    ``s_i`` is ``(-1)^i`` when ``alternate`` is set and 1 otherwise.  Every
    ``x_i`` must be invertible modulo ``m``.
    """
    total = 0
    sign = 1
    for x in range(start, stop, step):
        term = pow(x, -k, m) if k else 1
        total += sign * term
        if alternate:
            sign = -sign
    return total % m


def u_residues(nmax, m):
    """``[U_0 mod m, ..., U_nmax mod m]`` via the defining recurrence.

    Row n of Pascal's triangle mod m is updated in place as n grows.
    """
    out = [1 % m]
    row = [1] + [0] * nmax
    for n in range(1, nmax + 1):
        for j in range(n, 0, -1):
            row[j] = (row[j] + row[j - 1]) % m
        if n % 2:
            out.append(0)
            continue
        s = 0
        for k in range(1, n // 2 + 1):
            s += row[2 * k] * out[n - 2 * k]
        out.append(-2 * s % m)
    return out
