"""Free extended Rota-Baxter algebras, their derived structures and companion relations."""

__version__ = "0.1.0"
