from consola.comandos import ComandoConsola
from consola.services import VARIANTES


class Command(ComandoConsola):
    help = "Polinomio cromático de un hipergrafo (subset, cap o mixed)"
    comando = 'chromatic'

    def agregar_opciones(self, parser):
        parser.add_argument('--variant', choices=VARIANTES, default='subset')
        parser.add_argument('--basis', choices=('monomial', 'hilbert'), default='monomial')
        parser.add_argument('--evaluate', type=int, help="Evalúa además el polinomio en este entero (ej: -1)")

    def opciones_del_comando(self, options) -> dict:
        return {'variant': options['variant'], 'basis': options['basis'], 'evaluate': options['evaluate']}
