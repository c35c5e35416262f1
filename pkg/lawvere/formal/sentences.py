"""Named self-referential sentences, each the diagonal sentence of an E(x).

goedel   C says: no y proves me
rosser   C says: any proof of me is preceded by a proof of my negation
tarski   C says: I am not true
parikh   C says: I have no proof shorter than n
curry    C says: if I am true then A
"""
from lawvere.core.exceptions import InputError
from lawvere.formal.lemma import diagonal_sentence, free_variables, unquote_step
from lawvere.formal.syntax import (
    M,
    PRFLEN,
    PROV,
    TRUE,
    W,
    X,
    Y,
    And,
    Exists,
    ForAll,
    Imp,
    Less,
    NegT,
    Not,
    Num,
    PredF,
    UnquoteF,
    VarT,
)


def prov(proof, sentence):
    return PredF(PROV, (proof, sentence))


def goedel_formula():
    return ForAll(Y, Not(prov(VarT(Y), VarT(X))))


def rosser_formula():
    earlier_refutation = Exists(W, And(Less(VarT(W), VarT(Y)), prov(VarT(W), NegT(VarT(X)))))
    return ForAll(Y, Imp(prov(VarT(Y), VarT(X)), earlier_refutation))


def tarski_formula():
    return Not(PredF(TRUE, (VarT(X),)))


def parikh_formula(n):
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"proof length bound must be at least 1, got {n!r}", field="n")
    return Not(Exists(M, And(Less(VarT(M), Num(n)), PredF(PRFLEN, (VarT(M), VarT(X))))))


def curry_formula(a):
    if free_variables(a):
        raise InputError("A must be a closed formula", field="a")
    return Imp(UnquoteF(VarT(X)), a)


BUILDERS = {
    "goedel": goedel_formula,
    "rosser": rosser_formula,
    "tarski": tarski_formula,
    "parikh": parikh_formula,
    "curry": curry_formula,
}


def named_sentence(kind, *args):
    """Certificate for one of goedel, rosser, tarski, parikh(n), curry(A)"""
    try:
        builder = BUILDERS[kind]
    except KeyError:
        raise InputError(f"unknown sentence {kind!r}; choose from {', '.join(BUILDERS)}", field="kind")
    return diagonal_sentence(builder(*args), X)


def curry_unfolding(cert):
    """One unquote step on the antecedent of the reduced Curry sentence: C becomes C -> A"""
    reduced = cert.reduced
    return Imp(unquote_step(reduced.a), reduced.b)
