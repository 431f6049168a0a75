from antipodas.services import METODOS
from consola.comandos import ComandoConsola


class Command(ComandoConsola):
    help = "Antípoda de un hipergrafo"
    comando = 'antipode'

    def agregar_opciones(self, parser):
        parser.add_argument('--mode', default='subset', help="Modo del coproducto: 'subset', 'cap' o un par 'subset,cap'")
        parser.add_argument('--method', choices=METODOS, default='takeuchi')

    def opciones_del_comando(self, options) -> dict:
        return {'mode': options['mode'], 'method': options['method']}
