"""Built-in example specs."""

from collections.abc import Callable

from .spec_file import SpecFile


def baumslag(k: int = 1) -> SpecFile:
    """
    Cyclic module over ℤ^{2k} with annihilators 1 + x_i − y_i.

    Args:
        k: Number of generator pairs

    Returns:
        SpecFile with one layer
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    names = " ".join(f"x{i} y{i}" for i in range(1, k + 1))
    lines = ["[group]", f"layer {names}", "", "[module]", "gen a"]
    lines += [f"ann layer=1 gen=a 1 + x{i} - y{i}" for i in range(1, k + 1)]
    lines += [f"rel gen=a 1 + x{i} - y{i}" for i in range(1, k + 1)]
    return SpecFile.parse("\n".join(lines) + "\n")


def heisenberg(k: int = 1, ell: int = 2) -> SpecFile:
    """
    Cyclic module over the Heisenberg group of rank k.

    The series is {1} < Z < Q with [x_i, y_i] = z. Layer 1 uses the annihilators
    1 + x_i − y_i, layer 2 uses z − ell.

    Args:
        k: Number of generator pairs
        ell: Integer greater than 1

    Returns:
        SpecFile with two layers
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if ell < 2:
        raise ValueError("ell must be at least 2")
    names = " ".join(f"x{i} y{i}" for i in range(1, k + 1))
    lines = ["[group]", f"layer {names}", "layer z"]
    lines += [f"comm [x{i}, y{i}] = z^1" for i in range(1, k + 1)]
    lines += ["", "[module]", "gen a"]
    lines += [f"ann layer=1 gen=a 1 + x{i} - y{i}" for i in range(1, k + 1)]
    lines.append(f"ann layer=2 gen=a z - {ell}")
    lines += [f"rel gen=a 1 + x{i} - y{i}" for i in range(1, k + 1)]
    lines.append(f"rel gen=a z - {ell}")
    return SpecFile.parse("\n".join(lines) + "\n")


def free_module(rank: int = 2) -> SpecFile:
    """Free cyclic module over ℤ^rank; never certified tame."""
    if rank < 1:
        raise ValueError("rank must be at least 1")
    names = " ".join(f"t{i}" for i in range(1, rank + 1))
    return SpecFile.parse(f"[group]\nlayer {names}\n\n[module]\ngen a\n")


EXAMPLES: dict[str, Callable[..., SpecFile]] = {
    "baumslag": baumslag,
    "heisenberg": heisenberg,
    "free": free_module,
}
