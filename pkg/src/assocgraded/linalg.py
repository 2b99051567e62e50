"""Incremental reduced row echelon form over sparse rows.

Rows are dicts mapping sortable column keys to nonzero field elements.
The pivot of a row is its least column key.  Every stored row is monic at
its pivot and has zero entries in all other pivot columns.
"""


class Echelon:
    def __init__(self):
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec):
        """Return vec minus its projection onto the stored span (a new dict)."""
        out = dict(vec)
        hits = [c for c in out if c in self.rows]
        for col in hits:
            coeff = out.get(col)
            if coeff is None:
                continue
            for c, v in self.rows[col].items():
                nv = out.get(c, 0) - coeff * v
                if nv == 0:
                    out.pop(c, None)
                else:
                    out[c] = nv
        return out

    def add(self, vec):
        """Insert vec; return its pivot, or None if it was already in the span."""
        res = self.reduce(vec)
        if not res:
            return None
        piv = min(res)
        lead = res[piv]
        if lead != 1:
            inv = 1 / lead
            res = {c: v * inv for c, v in res.items()}
        for row in self.rows.values():
            coeff = row.get(piv)
            if coeff is None:
                continue
            for c, v in res.items():
                nv = row.get(c, 0) - coeff * v
                if nv == 0:
                    row.pop(c, None)
                else:
                    row[c] = nv
        self.rows[piv] = res
        return piv

    def contains(self, vec):
        return not self.reduce(vec)

    def pivots(self):
        return sorted(self.rows)

    def sorted_rows(self):
        return [(p, self.rows[p]) for p in sorted(self.rows)]


def kernel(images, tags):
    """Kernel of the linear map sending basis vector ``tags[i]`` to ``images[i]``.

    Returns a list of (pivot_tag, {tag: coeff}) in reduced echelon form,
    pivots increasing in tag order.
    """
    ech = Echelon()
    for img, tag in zip(images, tags):
        row = {(0, c): v for c, v in img.items()}
        row[(1, tag)] = 1
        ech.add(row)
    out = []
    for piv, row in ech.sorted_rows():
        if piv[0] == 1:
            out.append((piv[1], {c[1]: v for c, v in row.items()}))
    return out


def intersect_spans(a_rows, b_rows):
    """Basis (as an Echelon) of span(a_rows) ∩ span(b_rows) via Zassenhaus."""
    ech = Echelon()
    for v in a_rows:
        row = {(0, c): x for c, x in v.items()}
        row.update({(1, c): x for c, x in v.items()})
        ech.add(row)
    for v in b_rows:
        ech.add({(0, c): x for c, x in v.items()})
    out = Echelon()
    for piv, row in ech.sorted_rows():
        if piv[0] == 1:
            out.add({c[1]: x for c, x in row.items()})
    return out
