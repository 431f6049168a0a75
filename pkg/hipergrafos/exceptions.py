class LimiteExcedido(Exception):
    """
    Se lanza cuando una enumeración superaría un límite configurado
    (vértices, cuasi-órdenes o cota de trabajo).

    Attributes:
        recurso (str): Nombre del recurso limitado.
        valor (int): Tamaño solicitado.
        limite (int): Límite configurado en settings.
    """

    def __init__(self, recurso: str, valor: int, limite: int):
        self.recurso = recurso
        self.valor = valor
        self.limite = limite
        super().__init__(
            f"Límite excedido para {recurso}: se pidió {valor} y el máximo es {limite}")
