# Independent reference values, computed with mpmath/scipy and pasted into the
# C++ tests. Rerun by hand if a definition changes.
import mpmath as mp
from scipy.special import roots_jacobi, jn_zeros
from scipy.special import jv
from scipy.optimize import brentq

mp.mp.dps = 30


def E(k, z):
    # rank-one kernel, root sqrt2, weight 2^k |x|^{2k}
    z = mp.mpf(z)
    if z == 0:
        return mp.mpf(1)
    j = lambda nu, s: mp.gamma(nu + 1) * mp.besseli(nu, s) / (s / 2) ** nu
    return j(k - 0.5, z) + z / (2 * k + 1) * j(k + 0.5, z)


def Ei(k, w):
    w = mp.mpf(w)
    j = lambda nu, s: mp.gamma(nu + 1) * mp.besselj(nu, s) / (s / 2) ** nu
    return j(k - 0.5, w), w / (2 * k + 1) * j(k + 0.5, w)


def mass(k):
    return mp.quad(lambda x: mp.e ** (-x * x / 2) * 2**k * abs(x) ** (2 * k), [-mp.inf, 0, mp.inf])


def heat(k, t, x, y):
    return E(k, x * y / (2 * t)) * mp.e ** (-(x * x + y * y) / (4 * t)) / (mass(k) * (2 * t) ** (k + 0.5))


print("gauss_jacobi(5, 0.5, 1.5)")
x, w = roots_jacobi(5, 0.5, 1.5)
print(" nodes", ", ".join("%.15g" % v for v in x))
print(" weights", ", ".join("%.15g" % v for v in w))

for k, z in [(0.5, 1.3), (1.5, -2.7), (0.3, 7.0), (1.0, 12.5)]:
    print("E", k, z, mp.nstr(E(k, z), 17))
for k, w_ in [(0.5, 2.2), (1.5, -5.0)]:
    re, im = Ei(k, w_)
    print("Ei", k, w_, mp.nstr(re, 17), mp.nstr(im, 17))
for k in [0.0, 0.5, 1.5]:
    print("mass", k, mp.nstr(mass(k), 17))
for k, t, x_, y_ in [(0.5, 0.7, 0.4, -1.1), (1.5, 0.2, 1.0, 0.9), (0.0, 1.0, 0.3, 2.0)]:
    print("heat", k, t, x_, y_, mp.nstr(heat(k, t, x_, y_), 17))

# box zeros: first zero of J_{k-1/2} and J_{k+1/2}
for k in [0.5, 1.5]:
    print("zeros", k, mp.nstr(mp.besseljzero(k - 0.5, 1), 17), mp.nstr(mp.besseljzero(k + 0.5, 1), 17))

# ball measure in d = 1: int_{x-r}^{x+r} 2^k |y|^{2k} dy
for k, c, r in [(0.5, 0.3, 1.0), (1.5, -2.0, 0.5)]:
    f = lambda y: 2**k * abs(y) ** (2 * k)
    print("ball", k, c, r, mp.nstr(mp.quad(f, sorted({c - r, 0, c + r}) if c - r < 0 < c + r else [c - r, c + r]), 17))

# Kato integrals
print("kato d2 log const t=0.5", mp.nstr(2 * mp.pi * mp.quad(lambda r: r * mp.log(1 / r), [0, 0.5]), 17))
print("kato d1 inverse_power beta=0.5 x=0 t=0.3", mp.nstr(2 * mp.quad(lambda y: y ** -0.5, [0, 0.3]), 17))

# heat modulus at x = 0, soft Coulomb a = 1
def heat_avg(k, s):
    c = mass(k)
    return mp.quad(lambda y: mp.e ** (-y * y / (4 * s)) / (c * (2 * s) ** (k + 0.5)) * 2**k * abs(y) ** (2 * k) / (1 + y * y), [-mp.inf, 0, mp.inf])

for k in [0.0, 0.5]:
    v = mp.quad(lambda s: heat_avg(k, s), [0, 0.01, 0.3])
    print("heatmod soft_coulomb x=0 t=0.3 k", k, mp.nstr(v, 17))

# resolvent at x = 0, V = 1: 1/a trivially. Soft Coulomb in d=1, k=0:
a = 2.0
v = mp.quad(lambda s: mp.e ** (-a * s) * heat_avg(0.0, s), [0, 0.01, 1, mp.inf])
print("resolvent soft_coulomb x=0 a=2 k=0", mp.nstr(v, 17))
