# Scratch validation of the analysis before freezing tests. Not part of the package.
import numpy as np, math
from fractions import Fraction as F
from bdew import build_bell_basis, Convention
from bdew.product_states import distribution, minimize_quadratic_form, oracle_min_c
from bdew.tensor_core import partial_transpose, eig_hermitian, outer

w = np.exp(2j * np.pi / 3)

# ---- 1. 3x3 catalog realizers under my convention ----
b33 = build_bell_basis((3, 3))
def P3(a, bvec):
    d = distribution(b33, [np.asarray(a, complex)/np.linalg.norm(a), np.asarray(bvec, complex)/np.linalg.norm(bvec)])
    return d

cat = {
    "(1/3,1/3,1/3)": ([1,0,0],[1,0,0]),
    "(1/3,0,0)":     ([1,1,1],[1,1,1]),
    "(0,1/3,0)":     ([1,w.conjugate(),w],[1,w.conjugate(),w]),
    "(0,0,1/3)":     ([1,w,w.conjugate()],[1,w,w.conjugate()]),
    "(0,1/4,1/4)":   ([0,1,1],[0,-1,1]),
    "(1/4,1/4,0)":   ([1,w,0],[1,-w,0]),
    "(1/4,0,1/4)":   ([1,0,w],[1,0,-w]),
}
print("== ThreeThreeX catalog (P00,P10,P20) ==")
for name,(a,bv) in cat.items():
    d = P3(a,bv)
    print(name, [round(d[(k,0)],6) for k in range(3)])

print("== ThreeThreeXPrime catalog (P00,P10,P01) ==")
catp = {
    "(1/3,1/3,0)": ([1,0,0],[1,0,0]),
    "(1/3,0,1/3)": ([1,1,1],[1,1,1]),
    "(0,1/3,1/3)": ([1,w,1],[1,1,w.conjugate()]),
    "(1/3,0,0)":   ([1,1,w],[1,1,w.conjugate()]),
    "(0,1/3,0)":   ([1,w.conjugate(),w],[1,w.conjugate(),w]),
    "(0,0,1/3)":   ([1,w.conjugate(),1],[1,1,w]),
}
for name,(a,bv) in catp.items():
    d = P3(a,bv)
    print(name, round(d[(0,0)],6), round(d[(1,0)],6), round(d[(0,1)],6))

# ---- 2. slice functions and plane violations ----
def slice_P(t, phi):
    return [ (1.0 - 2*t*(1-math.cos(phi + 2*math.pi*k/3)))**2 / 3.0 for k in range(3) ]
# check slice against real product states: alpha=(sqrt(x1),sqrt(x2),sqrt(x3)), beta with phases (0, phi, -phi) conj'd appropriately
def realize_slice(t, phi):
    x = [1-2*t, t, t]
    a = np.sqrt(np.array(x, dtype=complex))
    bb = np.array([math.sqrt(x[0]), math.sqrt(x[1]), math.sqrt(x[2])], dtype=complex)
    bb[1] *= np.exp(-1j*phi); bb[2] *= np.exp(1j*phi)   # so that conj(a_j b_j) = x_j e^{i phi_j}, phi=(0,phi,-phi)
    return a, bb
t0, c0 = 7/61, 13/14
phi0 = math.acos(c0)
Pslice = slice_P(t0, phi0)
a0, b0 = realize_slice(t0, phi0)
dreal = P3(a0, b0)
print("slice P vs realized:", [round(p,9) for p in Pslice], [round(dreal[(k,0)],9) for k in range(3)])
planes = {  # coefficient vectors for (P00,P10,P20): g = c . P - 1
    1: ( 1, 3,-1), 2: (-1, 3, 1), 3: (-1, 1, 3), 4: ( 1,-1, 3), 5: ( 3,-1, 1), 6: ( 3, 1,-1),
}
print("== plane violations on slice grid ==")
ts = np.linspace(0, .5, 401); phis = np.linspace(0, 2*math.pi, 721)
T, PH = np.meshgrid(ts, phis, indexing="ij")
Pk = [ (1.0 - 2*T*(1-np.cos(PH + 2*np.pi*k/3)))**2 / 3.0 for k in range(3) ]
for pid, c in planes.items():
    G = c[0]*Pk[0] + c[1]*Pk[1] + c[2]*Pk[2] - 1.0
    i, j = np.unravel_index(np.argmax(G), G.shape)
    print(f"plane {pid}: D={G[i,j]:.8f} (2/61={2/61:.8f}) at t={T[i,j]:.6f} (7/61={7/61:.6f}) cos={math.cos(PH[i,j]):.6f}")

# ---- full product-state max for plane 6 via see-saw ----
c = planes[6]
Gmat = c[0]*b33.projector((0,0)) + c[1]*b33.projector((1,0)) + c[2]*b33.projector((2,0))
res = minimize_quadratic_form(Gmat, (3,3), grid_density=16, seed=3, maximize=True)
print("full search plane6 max-1 =", res.c_min - 1, " vs 2/61 =", 2/61)

# ---- 3. window endpoints: candidate vertex values ----
def cmin_candidates(x):
    # catalog + generated vertices (rational, precomputed from the analysis)
    pts = [ (F(1,3),F(1,3),F(1,3)), (F(1,3),0,0), (0,F(1,3),0), (0,0,F(1,3)),
            (0,F(1,4),F(1,4)), (F(1,4),F(1,4),0), (F(1,4),0,F(1,4)),
            (0,0,0), (F(63,244),F(63,244),0), (F(63,244),0,F(63,244)), (0,F(63,244),F(63,244)) ]
    def C(P):
        return F(1,8) * (1 - P[0] + (8*x-1)*(P[1]-P[2]))
    return min(C(p) for p in pts)
for x in [F(67,756)-F(1,1000), F(67,756), F(1,8), F(61,378), F(61,378)+F(1,1000)]:
    print("x=", x, " candidate C_min=", cmin_candidates(x), "=1/12?", cmin_candidates(x)==F(1,12))

# ---- 4. PT blocks of W_c(x) ----
def Wc(x):
    I9 = np.eye(9)
    return 0.5*(I9/3 - b33.projector((0,0)) + (8*x-1)*(b33.projector((1,0)) - b33.projector((2,0))))
x = 67/756
WT = partial_transpose(Wc(x), (3,3), 0)
B = b33.states  # rows are states
M = B.conj() @ WT @ B.T  # Bell-basis matrix
# sector structure: indices (j,k) lex order, row = 3j+k
off = 0.0
blocks = []
for j in range(3):
    blk = M[3*j:3*j+3, 3*j:3*j+3]
    blocks.append(blk)
mask = np.ones((9,9), bool)
for j in range(3):
    mask[3*j:3*j+3, 3*j:3*j+3] = False
print("off-sector max:", np.abs(M[mask]).max())
print("block0:\n", np.round(blocks[0], 6))
Cjs = [blocks[j][1,2] for j in range(3)]
print("|C_j|:", [abs(c) for c in Cjs], " closed form:", math.sqrt(1+192*(x-0.125)**2)/6)
print("C_j/C_0:", [Cjs[j]/Cjs[0] for j in range(3)], " (omega =", w, ")")
lam_p = 1/6 + abs(Cjs[0]); lam_m = 1/6 - abs(Cjs[0])
ev = np.linalg.eigvalsh(WT)
print("eigs:", np.round(ev, 6), " lam- closed:", lam_m, " lam+ closed:", lam_p)

# ---- 5. W_Lambda PT min eig vs claimed threshold ----
def Wred():
    return (np.eye(9) - 3*b33.projector((0,0)))/6
for lam in [0.25, 0.5, 0.9, 1/(1+3*abs(lam_m))]:
    WL = lam*Wc(x) + (1-lam)*Wred()
    me = np.linalg.eigvalsh(partial_transpose(WL, (3,3), 0))[0]
    xeff = 0.125 + lam*(x-0.125)
    pred = 1/6 - math.sqrt(1+192*(xeff-0.125)**2)/6
    print(f"Lambda={lam:.4f}: min eig={me:.8f} predicted={pred:.8f}")

# ---- 6. Choi ----
def choi_witness_direct(a,bq,cq):
    # (1/(3(a+b+c-1))) (a sum P_k0 + b sum P_k2 + c sum P_k1 - 3 P00)
    s = sum(b33.projector((k,0)) for k in range(3))
    s2 = sum(b33.projector((k,2)) for k in range(3))
    s1 = sum(b33.projector((k,1)) for k in range(3))
    return (a*s + bq*s2 + cq*s1 - 3*b33.projector((0,0))) / (3*(a+bq+cq-1))
def choi_map_apply(a,bq,cq,rho):
    d = np.diag([a*rho[0,0]+bq*rho[1,1]+cq*rho[2,2],
                 a*rho[1,1]+bq*rho[2,2]+cq*rho[0,0],
                 a*rho[2,2]+bq*rho[0,0]+cq*rho[1,1]])
    return d - rho
# Jamiolkowski: (I x phi)(P00) / (a+b+c-1)
def jam(a,bq,cq):
    P00 = b33.projector((0,0))
    out = np.zeros((9,9), complex)
    for i in range(3):
        for l in range(3):
            Eil = np.zeros((3,3), complex); Eil[i,l] = 1
            out += np.kron(Eil, choi_map_apply(a,bq,cq, Eil))
    return out/3/(a+bq+cq-1)
for abc in [(1,1,1),(2,1,0),(2.5,1.5,0.5)]:
    Wj = jam(*abc); Wd = choi_witness_direct(*abc)
    print("choi", abc, "jam vs direct:", np.abs(Wj-Wd).max(), " trace:", np.trace(Wd).real)
print("choi(1,1,1) vs Wred:", np.abs(choi_witness_direct(1,1,1) - Wred()).max())

# Choi aggregates at the catalog states
def aggr(a, bv):
    d = P3(a,bv)
    p1 = d[(1,0)]+d[(2,0)]; p2 = sum(d[(k,2)] for k in range(3)); p3 = sum(d[(k,1)] for k in range(3))
    return p1,p2,p3
print("choi catalog:")
print(" (1,w,wbar)x2:", np.round(aggr([1,w,w.conjugate()],[1,w,w.conjugate()]),6))
print(" (1,0,0)(0,0,1):", np.round(aggr([1,0,0],[0,0,1]),6))
print(" (1,0,0)(0,1,0):", np.round(aggr([1,0,0],[0,1,0]),6))
print(" (1,0,0)x2:", np.round(aggr([1,0,0],[1,0,0]),6))

# Delta: max over product states of 3P1+2P2+P3 - 2 and 3P1+P2+2P3 - 2
s10 = sum(b33.projector((k,0)) for k in range(1,3))
s_p2 = sum(b33.projector((k,2)) for k in range(3))
s_p3 = sum(b33.projector((k,1)) for k in range(3))
G1 = 3*s10 + 2*s_p2 + 1*s_p3
G2 = 3*s10 + 1*s_p2 + 2*s_p3
for nm, G in [("3P1+2P2+P3", G1), ("3P1+P2+2P3", G2)]:
    r = minimize_quadratic_form(G, (3,3), grid_density=16, seed=5, maximize=True)
    print("Delta", nm, "=", r.c_min - 2)

# true C_min for (2,1,0): minimize (3 P1 + 2 P2 + 1 P3)/(3D), D=5
r = minimize_quadratic_form(G1, (3,3), grid_density=16, seed=7, maximize=False)
print("choi(2,1,0): true f_min =", r.c_min, " -> C_min_true =", r.c_min/15, " vs claimed 2/45 =", 2/45, " vs 1/15 =", 1/15)

# ---- 7. Appendix B identities & acceptance-8 style residues ----
rng = np.random.default_rng(0)
mx = 0.0
for _ in range(200):
    al = rng.standard_normal(3)+1j*rng.standard_normal(3); al/=np.linalg.norm(al)
    g = [al, al.conjugate()]
    val = float(np.real(np.kron(al, al.conjugate()).conj() @ Wc(0.11) @ np.kron(al, al.conjugate())))
    mx = max(mx, abs(val))
print("max |Tr(Wc a x abar)| over 200 random:", mx)

# ---- 8. 2xN family A/B checks (N=4) ----
b24 = build_bell_basis((2,4), Convention("two-by-n"))
def q_2n_A(N, x):
    q = {}
    for i1 in range(2):
        for i2 in range(N):
            q[(i1,i2)] = F(1-F(x))*0  # placeholder
    return q
# family A: q00=0, q10=x (phase index 1, shift 0), rest equal
def qA(N, x):
    q = {(0,0): F(0), (1,0): F(x)}
    rest = (1-F(x))/(2*N-2)
    for i1 in range(2):
        for i2 in range(N):
            if (i1,i2) not in q: q[(i1,i2)] = rest
    return q
for xv in [F(1,10), F(1,2)]:
    q = {k: float(v) for k,v in qA(4, xv).items()}
    r = oracle_min_c(b24, q, grid_density=12, seed=11)
    xf = float(xv)
    print(f"2x4 A x={xf}: oracle={r.c_min:.8f}  x/2={xf/2:.8f}  (1-x)/(4(N-1))={(1-xf)/12:.8f}  paper-(1-x)/2N={(1-xf)/8:.8f}")
# family B: q00=0, q01=x (shift index 1), rest equal
def qB(N, x):
    q = {(0,0): F(0), (0,1): F(x)}
    rest = (1-F(x))/(2*N-2)
    for i1 in range(2):
        for i2 in range(N):
            if (i1,i2) not in q: q[(i1,i2)] = rest
    return q
for xv in [F(1,10), F(1,2)]:
    q = {k: float(v) for k,v in qB(4, xv).items()}
    r = oracle_min_c(b24, q, grid_density=12, seed=11)
    xf = float(xv)
    print(f"2x4 B x={xf}: oracle={r.c_min:.8f}  (1-x)/(4(N-1))={(1-xf)/12:.8f}")

# multiqubit B n=3: corrected piecewise
b222 = build_bell_basis((2,2,2))
def qmB(n, x):
    q = {(0,)*n: F(0)}
    idx_x = (0,)*(n-1) + (1,)
    q[idx_x] = F(x)
    rest = (1-F(x))/(2**n-2)
    import itertools as it
    for idx in it.product(*[range(2)]*n):
        if idx not in q: q[idx] = rest
    return q
for xv in [F(1,10), F(1,2)]:
    q = {k: float(v) for k,v in qmB(3, xv).items()}
    r = oracle_min_c(b222, q, grid_density=12, seed=13)
    xf = float(xv)
    print(f"mq B n=3 x={xf}: oracle={r.c_min:.8f}  min(x/2,(1-x)/12)={min(xf/2,(1-xf)/12):.8f}")

# ---- 9. 3x3 oracle in window ----
def q33(x):
    q = {(0,0): F(0), (1,0): F(x), (2,0): F(1,4)-F(x)}
    for j in range(3):
        for k in range(1,3):
            q[(j,k)] = F(1,8)
    return q
for xv in [F(67,756), F(1,8), F(61,378), F(61,378)+F(1,50)]:
    q = {k: float(v) for k,v in q33(xv).items()}
    r = oracle_min_c(b33, q, grid_density=12, seed=17)
    print(f"3x3 x={float(xv):.6f}: oracle={r.c_min:.8f}  1/12={1/12:.8f}")

print("\n==== ROUND 2 ====")
# A. Hessian nature of the interior stationary point (plane 6)
def g6(t, phi):
    P = slice_P(t, phi)
    return 3*P[0] + P[1] - P[2] - 1
t0, phi0 = 7/61, math.acos(13/14)
h = 1e-5
gtt = (g6(t0+h,phi0)-2*g6(t0,phi0)+g6(t0-h,phi0))/h**2
gpp = (g6(t0,phi0+h)-2*g6(t0,phi0)+g6(t0,phi0-h))/h**2
gtp = (g6(t0+h,phi0+h)-g6(t0+h,phi0-h)-g6(t0-h,phi0+h)+g6(t0-h,phi0-h))/(4*h**2)
print("stationary value:", g6(t0,phi0), " 2/61 =", 2/61)
print("Hessian:", gtt, gpp, gtp, " det:", gtt*gpp-gtp**2, "(neg det => saddle)")

# B. see-saw now finds the global plane-6 violation?
res = minimize_quadratic_form(Gmat, (3,3), grid_density=16, seed=3, maximize=True)
print("full search plane6 max-1 =", res.c_min - 1, " vs 1/sqrt3-1/2 =", 1/math.sqrt(3)-0.5)

# C. multiqubit A oracle checks (criterion 1)
for n in (2,3,4):
    bq = build_bell_basis((2,)*n)
    def qmA(n, x):
        q = {(0,)*n: F(0)}
        idx_x = (1,) + (0,)*(n-1)
        q[idx_x] = F(x)
        rest = (1-F(x))/(2**n-2)
        import itertools as it
        for idx in it.product(*[range(2)]*n):
            if idx not in q: q[idx] = rest
        return q
    for xv in [F(1,10), F(3,5)]:
        q = {k: float(v) for k,v in qmA(n, xv).items()}
        r = oracle_min_c(bq, q, grid_density=8, seed=19)
        xf = float(xv)
        split = 1/(2**(n-1)+1)
        expect = xf/2 if xf <= split else (1-xf)/2**n
        print(f"mqA n={n} x={xf}: oracle={r.c_min:.8f} closed={expect:.8f}")

# D. multiqubit B n=2 piecewise & n=3 paper-form check at small x
b22 = build_bell_basis((2,2))
for xv in [F(1,10), F(1,2)]:
    q = {k: float(v) for k,v in qmB(2, xv).items()}
    r = oracle_min_c(b22, q, grid_density=8, seed=23)
    xf = float(xv)
    print(f"mqB n=2 x={xf}: oracle={r.c_min:.8f} min(x/2,(1-x)/4)={min(xf/2,(1-xf)/4):.8f}")

# E. XPrime oracle both branches
def q33p(x):
    q = {(0,0): F(0), (1,0): F(x), (0,1): F(1,4)-F(x)}
    for (j,k) in [(2,0),(0,2),(1,1),(2,2),(1,2),(2,1)]:
        q[(j,k)] = F(1,8)
    return q
for xv in [F(1,20), F(1,8), F(1,5), F(1,4)]:
    q = {k: float(v) for k,v in q33p(xv).items()}
    r = oracle_min_c(b33, q, grid_density=12, seed=29)
    xf = float(xv)
    expect = (3-8*xf)/24 if xf >= 0.125 else (1+8*xf)/24
    print(f"33' x={xf}: oracle={r.c_min:.8f} branch-closed={expect:.8f}")

# F. true 3x3 C_min formula across window
for xv in [F(67,756), F(1,10), F(1,8), F(61,378)]:
    xf = float(xv)
    R = math.sqrt(1+3*(8*xf-1)**2)
    print(f"3x3 x={xf:.6f}: circle-form={(5-R)/48:.9f}")

# G. exactness hunt for Choi Delta = 1/3 and the argmax state
r = minimize_quadratic_form(G1, (3,3), grid_density=24, seed=31, maximize=True)
print("Delta refined:", r.c_min - 2, " 1/3 =", 1/3)
for f in r.argmin: print("  argmax factor:", np.round(f,4))

# H. criterion 6 numbers: bound state at x=67/756, eta=0
x = 67/756
lamP = 1/6 + math.sqrt(1+192*(x-0.125)**2)/6
lamM = 1/6 - math.sqrt(1+192*(x-0.125)**2)/6
WT = partial_transpose(Wc(x), (3,3), 0)
ww, vv = np.linalg.eigh(WT)
Qm = vv[:, :3] @ vv[:, :3].conj().T   # lam- eigenspace
Qp = vv[:, 6:] @ vv[:, 6:].conj().T
Q0 = vv[:, 3:6] @ vv[:, 3:6].conj().T
mu, eta, zeta = 0.151828, 0.0, 0.05
rho = mu*partial_transpose(Q0,(3,3),0) + eta*partial_transpose(Qp,(3,3),0) + zeta*partial_transpose(Qm,(3,3),0)
rho = rho/np.trace(rho).real
ev_rho = np.linalg.eigvalsh(rho); ev_pt = np.linalg.eigvalsh(partial_transpose(rho,(3,3),0))
print("rho min eig:", ev_rho[0], " rho^TA min eig:", ev_pt[0], " Tr(Wc rho):", np.trace(Wc(x)@rho).real)
print("Q0 PT-invariant:", np.abs(Q0 - partial_transpose(Q0,(3,3),0)).max())

# I. boundary separables
rho0 = sum(np.kron(outer(np.eye(3)[l]), outer(np.eye(3)[l])) for l in range(3))/3
rhop0 = sum(b33.projector((0,k)) for k in range(3))/3
for lam in (0.0, 0.5, 1.0):
    WL = lam*Wc(67/756) + (1-lam)*Wred()
    for mu_ in (0.0, 0.25, 0.5, 0.75, 1.0):
        rs = mu_*rho0 + (1-mu_)*rhop0
        v = np.trace(WL @ rs).real
        if abs(v) > 1e-12: print("boundary-sep FAIL", lam, mu_, v)
print("boundary separables: all |Tr| <= 1e-12 OK")
# rhop0 separable decomposition: Fourier products
fq = [np.array([1, w**q_, w**(2*q_)])/math.sqrt(3) for q_ in range(3)]
dec = sum(np.kron(outer(fq[q_]), outer(fq[q_].conjugate())) for q_ in range(3))/3
print("rho'_0 Fourier-product decomposition max diff:", np.abs(dec - rhop0).max())

print("\n==== ROUND 3 ====")
# plane 5 = 3P00 - P10 + P20 at (7/61, +acos(13/14)); gradient + Hessian
def g5(t, phi):
    P = slice_P(t, phi)
    return 3*P[0] - P[1] + P[2] - 1
t0, phi0 = 7/61, math.acos(13/14)
h = 1e-5
print("g5 at tabulated point:", g5(t0,phi0), " 2/61 =", 2/61)
gt = (g5(t0+h,phi0)-g5(t0-h,phi0))/(2*h); gp = (g5(t0,phi0+h)-g5(t0,phi0-h))/(2*h)
print("gradient:", gt, gp)
gtt = (g5(t0+h,phi0)-2*g5(t0,phi0)+g5(t0-h,phi0))/h**2
gpp = (g5(t0,phi0+h)-2*g5(t0,phi0)+g5(t0,phi0-h))/h**2
gtp = (g5(t0+h,phi0+h)-g5(t0+h,phi0-h)-g5(t0-h,phi0+h)+g5(t0-h,phi0-h))/(4*h**2)
print("Hessian:", gtt, gpp, gtp, " det:", gtt*gpp-gtp**2, "  (det>0 & gtt<0 => local max)")
# plane 6 at the mirrored phase
print("g6 at (7/61, -acos(13/14)):", g6(t0,-phi0))

# TwoByN_A catalog N=3
b23 = build_bell_basis((2,3), Convention("two-by-n"))
def P2N(a, bv):
    a = np.asarray(a, complex); a = a/np.linalg.norm(a)
    bv = np.asarray(bv, complex); bv = bv/np.linalg.norm(bv)
    d = distribution(b23, [a, bv])
    return d[(0,0)], d[(1,0)], d[(0,1)]
print("2xN A catalog (P00,P10) + B (P01):")
print(" (1,0)x(1,0,0):", np.round(P2N([1,0],[1,0,0]),6))
print(" (1,1)x(1,1,0):", np.round(P2N([1,1],[1,1,0]),6))
print(" (1,-1)x(1,1,0):", np.round(P2N([1,-1],[1,1,0]),6))
print(" (1,0)x(0,1,0):", np.round(P2N([1,0],[0,1,0]),6))

# detection r bound: r* = (-3+27 T)/(1+27 T), T = zeta|lam-| - eta lam+ with mu+eta+zeta=1/3
x = 67/756
lamM_abs = abs(1/6 - math.sqrt(1+192*(x-0.125)**2)/6)
lamP = 1/6 + math.sqrt(1+192*(x-0.125)**2)/6
eta, zeta = 0.0, 1/27
mu = 1/3 - eta - zeta
T = zeta*lamM_abs - eta*lamP
rstar = (-3+27*T)/(1+27*T)
print("r* =", rstar, " (-3+|lam-|)/(1+|lam-|) =", (-3+lamM_abs)/(1+lamM_abs))
WT = partial_transpose(Wc(x), (3,3), 0)
ww, vv = np.linalg.eigh(WT)
Qm = vv[:, :3] @ vv[:, :3].conj().T; Qp = vv[:, 6:] @ vv[:, 6:].conj().T; Q0 = vv[:, 3:6] @ vv[:, 3:6].conj().T
rho = mu*Q0 + eta*partial_transpose(Qp,(3,3),0) + zeta*partial_transpose(Qm,(3,3),0)
rho = rho/np.trace(rho).real
def W_of_r(r, x):
    I9 = np.eye(9)
    q = q33(F(67,756))
    S = sum(float(v)*b33.projector(k) for k,v in q.items())
    return float(r)*I9/9 + (1-float(r))*S
for dr in (-1e-3, +1e-3):
    val = np.trace(W_of_r(rstar+dr, x) @ rho).real
    print(f"  Tr(W(r*{dr:+.0e}) rho) = {val:.3e}")
# decomposability bound comparison
rnd = (-3+9*lamM_abs)/(1+9*lamM_abs)
print("decomposability bound:", rnd, " r* <= bound?", rstar <= rnd)
# PT positivity flip across the nd bound
for dr in (-1e-3, 1e-3):
    me = np.linalg.eigvalsh(partial_transpose(W_of_r(rnd+dr, x), (3,3), 0))[0]
    print(f"  min eig W(rnd{dr:+.0e})^TA = {me:.3e}")

# timing estimate of an oracle call used in acceptance
import time
t1 = time.time()
q = {k: float(v) for k,v in q33(F(1,8)).items()}
r = oracle_min_c(b33, q, grid_density=12, seed=17)
print("oracle(3x3) time:", round(time.time()-t1, 2), "s")
t1 = time.time()
b16 = build_bell_basis((2,2,2,2))
import itertools as it
def qmA4(x):
    q = {(0,0,0,0): F(0), (1,0,0,0): F(x)}
    rest = (1-F(x))/(2**4-2)
    for idx in it.product(*[range(2)]*4):
        if idx not in q: q[idx] = rest
    return q
q = {k: float(v) for k,v in qmA4(F(1,10)).items()}
r = oracle_min_c(b16, q, grid_density=8, seed=19)
print("oracle(2^4) time:", round(time.time()-t1, 2), "s  val:", r.c_min)
