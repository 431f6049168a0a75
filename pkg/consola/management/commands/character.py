from consola.comandos import ComandoConsola
from consola.services import MODOS


class Command(ComandoConsola):
    help = "Valor del carácter λ (inverso de λ_0) en un hipergrafo"
    comando = 'character'

    def agregar_opciones(self, parser):
        parser.add_argument('--mode', choices=MODOS, default='subset')
        parser.add_argument('--method', choices=('inverse', 'counts'), default='inverse')

    def opciones_del_comando(self, options) -> dict:
        return {'mode': options['mode'], 'method': options['method']}
