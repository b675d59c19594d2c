import dataclasses

import pytest

from lrtensor import (
    DegreeMismatch,
    SOutOfRange,
    lr_coefficient,
    make_partition,
    sigma_tau,
    snn_bruteforce,
    snn_certificates,
    snn_failure_test,
    verify_certificate,
)
from lrtensor.snn import Case, Direction


def P(*parts, n=3):
    return make_partition(parts, n)


LAM, MU, NU, RHO = P(3, 1), P(1, 1), P(2, 2), P(2)


def test_sigma_tau_paper_example():
    assert sigma_tau(LAM, MU, NU, RHO, 0) == ((2, 2, 2), (3, 2, 1))
    assert sigma_tau(LAM, MU, NU, RHO, 1) == ((4, 2, 0), (4, 1, 1))
    for s in range(3):
        sigma, tau = sigma_tau(LAM, MU, LAM, MU, s)
        assert sigma == tau
    with pytest.raises(SOutOfRange):
        sigma_tau(LAM, MU, NU, RHO, 3)


def test_failure_test_forward():
    cert = snn_failure_test(LAM, MU, NU, RHO)
    assert cert.s == 0
    assert (cert.sigma, cert.tau) == ((2, 2, 2), (3, 2, 1))
    assert cert.witness == P(2, 2, 2)
    assert cert.case is Case.MINIMALITY
    # witness chosen as the s-cut of (nu, rho): absent from s_lam s_mu, present in s_nu s_rho
    assert lr_coefficient(P(2, 2, 2), LAM, MU) == 0
    assert lr_coefficient(P(2, 2, 2), NU, RHO) > 0
    assert verify_certificate(cert, LAM, MU, NU, RHO)
    assert snn_bruteforce(LAM, MU, NU, RHO).witness == P(2, 2, 2)


def test_failure_test_swapped():
    cert = snn_failure_test(NU, RHO, LAM, MU)
    assert cert.s == 1
    assert (cert.sigma, cert.tau) == ((4, 1, 1), (4, 2, 0))
    assert cert.witness == P(4, 1, 1)
    assert verify_certificate(cert, NU, RHO, LAM, MU)
    assert not snn_bruteforce(NU, RHO, LAM, MU).nonnegative


def test_all_certificates_both_directions():
    certs = snn_certificates(LAM, MU, NU, RHO)
    assert [(c.s, c.direction) for c in certs] == [
        (0, Direction.LAMBDA_MU), (1, Direction.NU_RHO),
    ]
    assert all(verify_certificate(c, LAM, MU, NU, RHO) for c in certs)
    assert all(c.tau > c.sigma for c in certs)


def test_identical_products_inconclusive():
    assert snn_failure_test(LAM, MU, LAM, MU) is None
    assert snn_bruteforce(LAM, MU, LAM, MU).nonnegative
    assert snn_certificates(LAM, MU, MU, LAM) == []


def test_tampered_certificate_rejected():
    cert = snn_failure_test(LAM, MU, NU, RHO)
    for witness in (P(3, 2, 1), P(4, 2), P(3, 3)):
        assert not verify_certificate(dataclasses.replace(cert, witness=witness), LAM, MU, NU, RHO)
    assert not verify_certificate(dataclasses.replace(cert, case=Case.PREFIX), LAM, MU, NU, RHO)
    assert not verify_certificate(dataclasses.replace(cert, s=1), LAM, MU, NU, RHO)


def test_prefix_case():
    # s_11 - s_2 at n = 2: at s = 1 the first rows are 1 and 2, so 2,0 is out of reach of s_0 s_11
    lam, mu, nu, rho = P(n=2), P(1, 1, n=2), P(n=2), P(2, n=2)
    cert = snn_failure_test(lam, mu, nu, rho)
    assert (cert.s, cert.case, cert.witness) == (1, Case.PREFIX, P(2, n=2))
    assert (cert.sigma, cert.tau) == ((1, 0), (2, 1))
    assert verify_certificate(cert, lam, mu, nu, rho)
    assert snn_bruteforce(lam, mu, nu, rho).witness == P(2, n=2)


def test_one_directional():
    # s_2 s_11 - s_22 = s_31 + s_211 - s_22 (Pieri): negative, yet no s certifies it
    q = P(2), P(1, 1), P(), P(2, 2)
    assert snn_failure_test(*q) is None
    assert snn_bruteforce(*q).witness == P(2, 2)


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        snn_failure_test(LAM, MU, NU, P(1))
    with pytest.raises(DegreeMismatch):
        snn_bruteforce(LAM, MU, NU, P(1))


def test_certificate_json():
    cert = snn_failure_test(LAM, MU, NU, RHO)
    assert cert.to_json() == {
        "s": 0, "sigma": [2, 2, 2], "tau": [3, 2, 1], "witness": [2, 2, 2],
        "case": "minimality", "direction": "lambda_mu",
    }
