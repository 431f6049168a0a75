from consola.comandos import ComandoConsola
from consola.services import ACCIONES_ORIENTACION


class Command(ComandoConsola):
    help = "Orientaciones acíclicas: listado, clasificación de un cuasi-orden o sumas con signo"
    comando = 'orientations'

    def agregar_opciones(self, parser):
        parser.add_argument('--action', choices=ACCIONES_ORIENTACION, default='sums')
        parser.add_argument('--orden', help='Cuasi-orden para classify: {"classes": [[...]], "order": [[i, j]]}')

    def opciones_del_comando(self, options) -> dict:
        return {'action': options['action'], 'orden': options['orden']}
